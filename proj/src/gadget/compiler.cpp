#include "hred/gadget/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/realize.hpp"
#include "hred/ops/spectrum.hpp"

namespace hred::gadget {

const char* verification_status_name(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::NotRun: return "not-run";
    case VerificationStatus::Passed: return "passed";
    case VerificationStatus::Failed: return "failed";
    case VerificationStatus::Skipped: return "skipped";
  }
  return "?";
}

VerificationStatus verification_status_from_name(const std::string& s) {
  for (auto v : {VerificationStatus::NotRun, VerificationStatus::Passed, VerificationStatus::Failed,
                 VerificationStatus::Skipped})
    if (s == verification_status_name(v)) return v;
  throw ValidationError(fmt::format("unknown verification status '{}'", s));
}

Pauli cyclic_next(Pauli a) {
  switch (a) {
    case Pauli::X: return Pauli::Y;
    case Pauli::Y: return Pauli::Z;
    case Pauli::Z: return Pauli::X;
    case Pauli::I: break;
  }
  throw ValidationError("identity has no cyclic successor");
}

Pauli third_pauli(Pauli a, Pauli b) {
  if (a == b || a == Pauli::I || b == Pauli::I) throw ValidationError("third_pauli needs two distinct axes");
  return static_cast<Pauli>(6 - static_cast<int>(a) - static_cast<int>(b));
}

namespace {

// coefficient * sum_k (first_k on a) (second_k on b)
struct Pending {
  std::size_t a = 0, b = 0;
  std::vector<std::pair<Pauli, Pauli>> axes;
  double coefficient = 0;
};

struct Builder {
  GadgetPlan& plan;
  ops::SpinHamiltonian compiled;
  std::size_t next_spin;

  std::size_t new_mediator() { return next_spin++; }

  void add_gadget(GadgetRecord g, const Pending& target, bool final_layer) {
    for (const auto& [pa, pb] : target.axes)
      g.target.emplace_back(target.coefficient, ops::PauliString::pair(target.a, pa, target.b, pb));

    const auto r = high_bloch_vector(g.theta, g.phi);
    const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int k = 0; k < 3; ++k)
      if (r[k] != 0.0) compiled.add(g.delta / 2 * r[k], {{g.mediator, axes[k]}});
    plan.offset -= g.delta / 2;

    if (final_layer)
      for (const auto& c : g.couplings)
        compiled.add(ops::PauliTerm(c.coefficient, ops::PauliString::pair(c.site, c.system_axis, g.mediator,
                                                                           c.mediator_axis)));

    const auto x = expand_gadget(g.couplings, g.theta, g.phi, g.delta);
    const double tol = 1e-9 * std::max(1.0, g.lambda * g.lambda / g.delta);
    for (const auto& [s, c] : x.first_order.terms())
      if (std::abs(c) > 0) compiled.add(ops::PauliTerm(-c.real(), s));

    ops::PauliSum expected;
    for (const auto& t : g.target) expected.add(t.coefficient(), t.string());
    for (const auto& [s, c] : x.second_order.terms()) {
      if (std::abs(c.imag()) > tol)
        throw Error(fmt::format("gadget on mediator {} has a non-Hermitian second-order term", g.mediator));
      if (s.weight() == 0) {
        plan.offset += c.real();
      } else if (s.weight() == 1) {
        if (std::abs(c.real()) > tol) compiled.add(ops::PauliTerm(-c.real(), s));
      } else {
        const cplx want = expected.coefficient(s);
        if (std::abs(c - want) > tol)
          throw Error(fmt::format("gadget on mediator {} produces {} * {} instead of {}", g.mediator, c.real(),
                                  s.to_string(), want.real()));
      }
    }
    for (const auto& [s, want] : expected.terms())
      if (std::abs(x.second_order.coefficient(s) - want) > tol)
        throw Error(fmt::format("gadget on mediator {} misses target {}", g.mediator, s.to_string()));
    plan.gadgets.push_back(std::move(g));
  }
};

std::vector<Pauli> other_two(Pauli a) {
  std::vector<Pauli> out;
  for (auto p : {Pauli::X, Pauli::Y, Pauli::Z})
    if (p != a) out.push_back(p);
  return out;
}

}  // namespace

GadgetPlan compile(const ops::SpinHamiltonian& source_in, double precision, const CompileOptions& opt) {
  if (opt.depth < 1 || opt.depth > 3) throw ValidationError("depth must be 1, 2 or 3");
  const ops::SpinHamiltonian source = source_in.canonicalized();
  const std::size_t n = source.num_spins();

  GadgetPlan plan;
  plan.source = source;
  plan.target_precision = precision;
  plan.depth = opt.depth;

  double identity = 0;
  ops::SpinHamiltonian fields(n);
  std::vector<Pending> pending;
  for (const auto& t : source.terms()) {
    const auto w = t.string().weight();
    if (w > 2) throw ValidationError(fmt::format("term {} is not 2-local", t.string().to_string()));
    if (w == 0) {
      identity += t.coefficient();
      continue;
    }
    if (std::abs(t.coefficient()) > 1.0)
      throw RescalingRequiredError(fmt::format("coefficient {} of {} exceeds 1; rescale the source first",
                                               t.coefficient(), t.string().to_string()));
    if (w == 1) {
      fields.add(t);
    } else {
      const auto f = t.factors();
      pending.push_back({f[0].site, f[1].site, {{f[0].axis, f[1].axis}}, t.coefficient()});
    }
  }

  const std::size_t equal_axes = static_cast<std::size_t>(std::count_if(
      pending.begin(), pending.end(), [](const Pending& p) { return p.axes[0].first == p.axes[0].second; }));
  std::vector<LayerSpec> specs;
  if (!pending.empty()) {
    if (equal_axes) specs.push_back({LayerKind::Decomposition, equal_axes, 1.0});
    const std::size_t couplings = pending.size() + equal_axes;
    const LayerSpec standard[3] = {{LayerKind::Coupling, couplings, 1.0},
                                   {LayerKind::Pair, 2 * couplings, 2.0},
                                   {LayerKind::Heisenberg, 4 * couplings, 2.0}};
    for (std::size_t i = 0; i < opt.depth; ++i) specs.push_back(standard[i]);
  }
  const Schedule schedule = schedule_scales(specs, precision, opt.schedule);
  plan.total_error_budget = schedule.total_error_budget;

  Builder b{plan, ops::SpinHamiltonian(n), n};
  double lambda_prev = 1;
  for (std::size_t li = 0; li < specs.size(); ++li) {
    const auto& spec = specs[li];
    const auto& sc = schedule.layers[li];
    plan.layers.push_back({spec.kind, spec.kappa, sc, spec.gadget_count});
    const bool final_layer = li + 1 == specs.size();
    const double unit = sc.lambda * sc.lambda / sc.delta;  // = lambda_prev / kappa
    std::vector<Pending> next;
    for (const auto& p : pending) {
      GadgetRecord g;
      g.layer = li;
      g.kind = spec.kind;
      g.lambda = sc.lambda;
      g.delta = sc.delta;
      const auto [A, B] = p.axes[0];
      switch (spec.kind) {
        case LayerKind::Decomposition: {
          if (A != B) {
            next.push_back(p);
            continue;
          }
          const auto s = other_two(A);
          const auto ang = coupling_angles(s[0], s[1], p.coefficient / unit);
          g.mediator = b.new_mediator();
          g.theta = ang.theta;
          g.phi = ang.phi;
          g.couplings = {{sc.lambda, p.a, A, s[0]}, {sc.lambda, p.b, A, s[1]}};
          next.push_back({p.a, g.mediator, {{A, s[0]}}, sc.lambda});
          next.push_back({p.b, g.mediator, {{A, s[1]}}, sc.lambda});
          break;
        }
        case LayerKind::Coupling: {
          if (A == B) throw ValidationError("coupling layer received equal axes; decomposition missing");
          const auto ang = coupling_angles(A, B, p.coefficient / unit);
          g.mediator = b.new_mediator();
          g.theta = ang.theta;
          g.phi = ang.phi;
          g.couplings = {{-sc.lambda, p.a, A, A}, {-sc.lambda, p.b, B, B}};
          next.push_back({p.a, g.mediator, {{A, A}}, -sc.lambda});
          next.push_back({p.b, g.mediator, {{B, B}}, -sc.lambda});
          break;
        }
        case LayerKind::Pair: {
          if (A != B || p.axes.size() != 1)
            throw ValidationError("pair layer expects a single A_m A_n coupling");
          const Pauli U = cyclic_next(A);
          if (U == A) throw ValidationError("wanted and unwanted Paulis coincide");
          if (std::abs(p.coefficient + 2 * unit) > 1e-9 * std::abs(p.coefficient))
            throw ValidationError(fmt::format("pair gadget needs coupling {} but the scales give {}", p.coefficient,
                                              -2 * unit));
          const auto ang = frozen_angles(U);
          g.mediator = b.new_mediator();
          g.theta = ang.theta;
          g.phi = ang.phi;
          g.frozen = U;
          for (auto site : {p.a, p.b})
            for (auto ax : {A, U}) g.couplings.push_back({-sc.lambda, site, ax, ax});
          next.push_back({p.a, g.mediator, {{A, A}, {U, U}}, -sc.lambda});
          next.push_back({p.b, g.mediator, {{A, A}, {U, U}}, -sc.lambda});
          break;
        }
        case LayerKind::Heisenberg: {
          if (p.axes.size() != 2) throw ValidationError("heisenberg layer expects A A + B B couplings");
          const Pauli A2 = p.axes[1].first;
          const Pauli C = third_pauli(A, A2);
          if (std::abs(p.coefficient + 2 * unit) > 1e-9 * std::abs(p.coefficient))
            throw ValidationError(fmt::format("heisenberg gadget needs coupling {} but the scales give {}",
                                              p.coefficient, -2 * unit));
          const auto ang = frozen_angles(C);
          g.mediator = b.new_mediator();
          g.theta = ang.theta;
          g.phi = ang.phi;
          g.frozen = C;
          for (auto site : {p.a, p.b})
            for (auto ax : {Pauli::X, Pauli::Y, Pauli::Z}) g.couplings.push_back({sc.lambda, site, ax, ax});
          break;
        }
      }
      b.compiled = b.compiled.with_num_spins(b.next_spin);
      b.add_gadget(std::move(g), p, final_layer);
    }
    pending = std::move(next);
    lambda_prev = sc.lambda;
  }
  (void)lambda_prev;

  ops::SpinHamiltonian compiled(b.next_spin);
  for (const auto& t : fields.terms()) compiled.add(t);
  for (const auto& t : b.compiled.terms()) compiled.add(t);
  plan.compiled = compiled.canonicalized();
  plan.offset -= identity;

  if (opt.verify) plan.verification = verify_plan(plan, opt.tolerance_factor, opt.verify_max_spins);
  return plan;
}

PlanVerification verify_plan(const GadgetPlan& plan, double tolerance_factor, std::size_t max_spins) {
  PlanVerification v;
  v.tolerance_factor = tolerance_factor;
  const std::size_t n = plan.source.num_spins();
  const std::size_t total = plan.compiled.num_spins();
  if (total > max_spins || total > ops::dense_spin_limit()) {
    v.status = VerificationStatus::Skipped;
    v.note = fmt::format("{} spins exceed the verification limit {}", total,
                         std::min(max_spins, ops::dense_spin_limit()));
    return v;
  }
  const Eigen::VectorXd src = ops::eigenvalues_hermitian(ops::realize_spin(plan.source));
  const Eigen::VectorXd low = total == n ? ops::eigenvalues_hermitian(ops::realize_spin(plan.compiled))
                                         : ops::lowest_eigenvalues(ops::realize_spin(plan.compiled), src.size());
  v.measured = ((low.array() - plan.offset) - src.array()).abs().maxCoeff();
  const double floor = verification_floor(plan);
  v.status = v.measured <= tolerance_factor * plan.total_error_budget + floor ? VerificationStatus::Passed
                                                                               : VerificationStatus::Failed;
  v.note = fmt::format("lowest {} of {} levels compared", src.size(), std::size_t{1} << total);
  return v;
}

double verification_floor(const GadgetPlan& plan) {
  double norm1 = 0;
  for (const auto& t : plan.compiled.terms()) norm1 += std::abs(t.coefficient());
  for (const auto& t : plan.source.terms()) norm1 += std::abs(t.coefficient());
  return 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, norm1);
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, std::map<std::pair<Pauli, Pauli>, double>> pair_terms(
    const ops::SpinHamiltonian& h) {
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::pair<Pauli, Pauli>, double>> out;
  const auto canonical = h.canonicalized();
  for (const auto& t : canonical.terms()) {
    if (t.string().weight() != 2) continue;
    const auto f = t.factors();
    out[{f[0].site, f[1].site}][{f[0].axis, f[1].axis}] += t.coefficient();
  }
  return out;
}

bool is_heisenberg_pair(const std::map<std::pair<Pauli, Pauli>, double>& m) {
  if (m.size() != 3) return false;
  const auto xx = m.find({Pauli::X, Pauli::X}), yy = m.find({Pauli::Y, Pauli::Y}), zz = m.find({Pauli::Z, Pauli::Z});
  if (xx == m.end() || yy == m.end() || zz == m.end()) return false;
  const double c = xx->second;
  return std::abs(yy->second - c) <= 1e-12 * std::abs(c) && std::abs(zz->second - c) <= 1e-12 * std::abs(c);
}

}  // namespace

std::size_t count_heisenberg_couplings(const ops::SpinHamiltonian& h) {
  std::size_t n = 0;
  for (const auto& [pair, m] : pair_terms(h))
    if (is_heisenberg_pair(m)) ++n;
  return n;
}

bool is_heisenberg_form(const ops::SpinHamiltonian& h) {
  for (const auto& t : h.terms())
    if (t.string().weight() > 2) return false;
  for (const auto& [pair, m] : pair_terms(h))
    if (!is_heisenberg_pair(m)) return false;
  return true;
}

}  // namespace hred::gadget
