#include "hred/lattice/hubbard.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/jordan.hpp"
#include "hred/ops/realize.hpp"
#include "hred/sw/schrieffer_wolff.hpp"

namespace hred::lattice {

using ops::Pauli;

std::size_t HubbardModel::max_degree() const {
  std::vector<std::size_t> deg(sites, 0);
  for (const auto& e : edges) {
    if (e.i < sites) ++deg[e.i];
    if (e.j < sites) ++deg[e.j];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

double HubbardModel::max_hopping() const {
  double t_max = 0;
  for (const auto& e : edges) t_max = std::max(t_max, std::abs(hopping(e)));
  return t_max;
}

void HubbardModel::validate() const {
  if (sites == 0) throw ValidationError("a Hubbard model needs at least one site");
  if (2 * sites > 62) throw ValidationError("at most 31 sites are supported");
  if (!(U > 0) || !std::isfinite(U)) throw ValidationError(fmt::format("U must be positive (got {})", U));
  if (!std::isfinite(t)) throw ValidationError("t must be finite");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.i >= sites || e.j >= sites)
      throw ValidationError(fmt::format("edge ({}, {}) out of range for {} sites", e.i, e.j, sites));
    if (e.i == e.j) throw ValidationError(fmt::format("edge ({}, {}) is a self-loop", e.i, e.j));
    if (!seen.insert(std::minmax(e.i, e.j)).second)
      throw ValidationError(fmt::format("duplicate edge ({}, {})", e.i, e.j));
    if (e.t && !std::isfinite(*e.t)) throw ValidationError("edge hopping must be finite");
  }
  if (!fields.empty() && fields.size() != sites)
    throw ValidationError(fmt::format("field table has {} rows for {} sites", fields.size(), sites));
  for (const auto& b : fields)
    for (double c : b)
      if (!std::isfinite(c)) throw ValidationError("fields must be finite");
}

ops::FermionOperator hubbard_hopping(const HubbardModel& m) {
  m.validate();
  ops::FermionOperator op(m.num_modes());
  for (const auto& e : m.edges) {
    const double t = m.hopping(e);
    if (t == 0) continue;
    for (int s = 0; s < 2; ++s) {
      op.add(t, {{mode_of(e.i, s), true}, {mode_of(e.j, s), false}});
      op.add(t, {{mode_of(e.j, s), true}, {mode_of(e.i, s), false}});
    }
  }
  return op;
}

ops::FermionOperator hubbard_interaction(const HubbardModel& m) {
  m.validate();
  ops::FermionOperator op(m.num_modes());
  for (std::size_t i = 0; i < m.sites; ++i)
    op.add(m.U, {{mode_of(i, 0), true}, {mode_of(i, 0), false}, {mode_of(i, 1), true}, {mode_of(i, 1), false}});
  return op;
}

namespace {

ops::SpinHamiltonian field_terms(const HubbardModel& m) {
  ops::SpinHamiltonian h(m.sites);
  const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::size_t i = 0; i < m.fields.size(); ++i)
    for (int k = 0; k < 3; ++k)
      if (m.fields[i][k] != 0) h.add(m.fields[i][k], {{i, axes[k]}});
  return h;
}

double field_norm(const std::array<double, 3>& b) { return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]); }

}  // namespace

ops::FermionOperator hubbard_fields(const HubbardModel& m) {
  m.validate();
  return ops::jordan_map_spin_to_fermion(field_terms(m), ops::interleaved_modes(m.sites), m.num_modes());
}

ops::FermionOperator build_hubbard(const HubbardModel& m) {
  return (hubbard_hopping(m) + hubbard_interaction(m) + hubbard_fields(m)).pruned();
}

std::uint64_t singly_occupied_state(std::size_t sites, std::uint64_t spin_config) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < sites; ++i) {
    const int down = static_cast<int>((spin_config >> (sites - 1 - i)) & 1);
    s |= std::uint64_t{1} << mode_of(i, down);
  }
  return s;
}

HalfFillingSector half_filling(std::size_t sites) {
  if (sites == 0 || sites > 12) throw ResourceError("half-filling sectors are built for 1 to 12 sites");
  HalfFillingSector h{ops::FockSector(2 * sites, sites), {}};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << sites); ++x)
    h.singly_occupied.push_back(*h.sector.index_of(singly_occupied_state(sites, x)));
  return h;
}

ExchangeModel heisenberg_from_hubbard(const HubbardModel& m) {
  m.validate();
  const double t_max = m.max_hopping();
  if (m.U < 10 * t_max * static_cast<double>(m.max_degree()))
    throw PerturbationRegimeError(fmt::format("U = {} is below 10 t deg_max = {}", m.U,
                                              10 * t_max * static_cast<double>(m.max_degree())));
  ExchangeModel r;
  r.hamiltonian = field_terms(m);
  for (const auto& e : m.edges) {
    const double t = m.hopping(e);
    if (t == 0) continue;
    const double j = t * t / m.U;
    for (auto a : {Pauli::X, Pauli::Y, Pauli::Z}) r.hamiltonian.add(j, {{e.i, a}, {e.j, a}});
    r.hamiltonian.add(ops::PauliTerm::identity(-j));
    const double at = std::abs(t);
    r.error_budget += at * at * at / (m.U * m.U);
    if (!m.fields.empty())
      r.error_budget += t * t * (field_norm(m.fields[e.i]) + field_norm(m.fields[e.j])) / (m.U * m.U);
  }
  r.hamiltonian = r.hamiltonian.canonicalized();
  return r;
}

EffectiveHamiltonianReport exchange_report(const HubbardModel& m, double tolerance) {
  if (m.sites > 6) throw ResourceError(fmt::format("exchange verification supports up to 6 sites (got {})", m.sites));
  const auto model = heisenberg_from_hubbard(m);
  const auto hf = half_filling(m.sites);
  const auto dim = static_cast<Eigen::Index>(hf.sector.dimension());
  const auto low_dim = static_cast<Eigen::Index>(hf.singly_occupied.size());

  const Eigen::MatrixXcd h = ops::realize_fermion(hubbard_interaction(m) + hubbard_fields(m), hf.sector);
  const Eigen::MatrixXcd v = ops::realize_fermion(hubbard_hopping(m), hf.sector);
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(dim, low_dim);
  for (Eigen::Index x = 0; x < low_dim; ++x) e(static_cast<Eigen::Index>(hf.singly_occupied[x]), x) = 1.0;

  EffectiveHamiltonianReport r;
  r.v0_norm = (e.adjoint() * v * e).cwiseAbs().maxCoeff();
  r.model = ops::realize_spin(model.hamiltonian.with_num_spins(m.sites));
  r.error_budget = model.error_budget;
  r.tolerance = tolerance;

  if (m.edges.empty() || m.max_hopping() == 0) {
    r.h_eff = e.adjoint() * h * e;
  } else {
    const auto split = sw::split_blocks(h, sw::ProjectorCriterion{e});
    const auto res = sw::effective_hamiltonian(h, v, split, 1.0, 2);
    r.warnings = res.warnings;
    const Eigen::MatrixXcd back = e.adjoint() * split.low;
    r.h_eff = back * res.h_eff * back.adjoint();
  }
  r.max_deviation = (r.h_eff - r.model).cwiseAbs().maxCoeff();
  r.passed = r.v0_norm == 0.0 && r.max_deviation <= tolerance;
  return r;
}

EffectiveHamiltonianReport verify_exchange(const HubbardModel& m, double tolerance) {
  auto r = exchange_report(m, tolerance);
  if (r.v0_norm != 0.0)
    throw VerificationError(r.v0_norm, fmt::format("hopping has a nonzero low-sector block ({:.3g})", r.v0_norm));
  if (r.max_deviation > tolerance)
    throw VerificationError(r.max_deviation, fmt::format("effective Hamiltonian deviates by {:.3g} (tolerance {:.3g})",
                                                         r.max_deviation, tolerance));
  return r;
}

HubbardLowering lower_heisenberg_layer(const gadget::GadgetPlan& plan) {
  if (plan.layers.empty() || plan.layers.back().kind != gadget::LayerKind::Heisenberg)
    throw ValidationError("plan has no Heisenberg layer to lower");
  const double delta_top = plan.layers.back().scale.delta;
  const double lambda_top = plan.layers.back().scale.lambda;

  std::map<std::pair<std::size_t, std::size_t>, std::map<Pauli, double>> pairs;
  for (const auto& t : plan.compiled.terms()) {
    const auto f = t.factors();
    if (f.size() == 2 && f[0].axis == f[1].axis) pairs[{f[0].site, f[1].site}][f[0].axis] = t.coefficient();
  }

  HubbardLowering low;
  std::map<std::size_t, std::size_t> site_of;
  std::set<std::pair<std::size_t, std::size_t>> lowered;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> couplings;
  for (const auto& [p, m] : pairs) {
    if (m.size() != 3) continue;
    const double c = m.at(Pauli::X);
    if (!(c > 0) || std::abs(m.at(Pauli::Y) - c) > 1e-12 * c || std::abs(m.at(Pauli::Z) - c) > 1e-12 * c) continue;
    for (auto s : {p.first, p.second})
      if (!site_of.count(s)) {
        site_of[s] = low.sites.size();
        low.sites.push_back(s);
      }
    lowered.insert(p);
    couplings.push_back({p, c});
  }
  if (couplings.empty()) throw ValidationError("plan has no antiferromagnetic Heisenberg couplings");

  low.model.sites = low.sites.size();
  low.model.t = 10 * delta_top;
  low.model.U = low.model.t * low.model.t / lambda_top;
  for (const auto& [p, c] : couplings) {
    HubbardEdge e{site_of[p.first], site_of[p.second], std::nullopt};
    if (std::abs(c - lambda_top) > 1e-12 * lambda_top) e.t = std::sqrt(c * low.model.U);
    low.model.edges.push_back(e);
    low.constant += c;
  }

  low.remainder = ops::SpinHamiltonian(plan.compiled.num_spins());
  for (const auto& t : plan.compiled.terms()) {
    const auto f = t.factors();
    if (f.size() == 2 && f[0].axis == f[1].axis && lowered.count({f[0].site, f[1].site})) continue;
    low.remainder.add(t);
  }
  return low;
}

}  // namespace hred::lattice
