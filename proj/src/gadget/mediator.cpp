#include "hred/gadget/mediator.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::gadget {

using std::numbers::pi;

Eigen::Matrix2cd rotation(double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const cplx e = std::polar(1.0, phi);
  Eigen::Matrix2cd m;
  m << c, -s * std::conj(e), s * e, c;
  return m;
}

SplittingBasis splitting_basis(double theta, double phi) {
  const Eigen::Matrix2cd m = rotation(theta, phi);
  return {m.col(0), m.col(1)};
}

cplx offdiag_element(Pauli p, double theta, double phi) {
  const auto b = splitting_basis(theta, phi);
  return b.low.dot(ops::pauli_matrix(p) * b.high);
}

double low_expectation(Pauli p, double theta, double phi) {
  const auto b = splitting_basis(theta, phi);
  return b.low.dot(ops::pauli_matrix(p) * b.low).real();
}

std::array<double, 3> high_bloch_vector(double theta, double phi) {
  const auto b = splitting_basis(theta, phi);
  std::array<double, 3> r{};
  const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int a = 0; a < 3; ++a) r[a] = b.high.dot(ops::pauli_matrix(axes[a]) * b.high).real();
  return r;
}

GadgetExpansion expand_gadget(const std::vector<MediatorCoupling>& couplings, double theta, double phi,
                              double delta) {
  if (!(delta > 0)) throw ValidationError("gadget splitting must be positive");
  const auto b = splitting_basis(theta, phi);
  GadgetExpansion out;
  std::vector<cplx> lh(couplings.size());
  for (std::size_t p = 0; p < couplings.size(); ++p) {
    const auto& c = couplings[p];
    const Eigen::Matrix2cd sigma = ops::pauli_matrix(c.mediator_axis);
    lh[p] = b.low.dot(sigma * b.high);
    const double f = b.low.dot(sigma * b.low).real();
    if (f != 0.0) out.first_order.add(c.coefficient * f, ops::PauliString::single(c.site, c.system_axis));
  }
  // -(1/Delta) sum_pq c_p c_q <l|s_p|h><h|s_q|l> P_p P_q
  for (std::size_t p = 0; p < couplings.size(); ++p)
    for (std::size_t q = 0; q < couplings.size(); ++q) {
      const cplx amp = -couplings[p].coefficient * couplings[q].coefficient / delta * lh[p] * std::conj(lh[q]);
      if (amp == 0.0) continue;
      const auto sp = ops::PauliString::single(couplings[p].site, couplings[p].system_axis);
      const auto sq = ops::PauliString::single(couplings[q].site, couplings[q].system_axis);
      auto [phase, s] = ops::multiply(sp, sq);
      out.second_order.add(amp * phase, s);
    }
  return out;
}

void MediatorGadget::validate() const {
  if (!(theta >= 0 && theta <= pi / 2)) throw ValidationError(fmt::format("theta {} outside [0, pi/2]", theta));
  if (!(phi >= 0 && phi < 2 * pi)) throw ValidationError(fmt::format("phi {} outside [0, 2pi)", phi));
  if (!(lambda > 0 && delta > 0)) throw ValidationError("lambda and Delta must be positive");
  if (lambda > delta / 10) throw ValidationError(fmt::format("lambda {} exceeds Delta/10 = {}", lambda, delta / 10));
  std::set<std::size_t> sites(system_sites.begin(), system_sites.end());
  if (sites.size() != system_sites.size()) throw ValidationError("gadget system sites must be distinct");
  if (sites.count(mediator)) throw ValidationError("mediator coincides with a system site");
}

EffectiveCoefficients mediator_effective(const MediatorGadget& g, std::array<Pauli, 3> paulis,
                                         std::size_t num_spins) {
  g.validate();
  if (g.system_sites.size() != 3) throw ValidationError("mediator_effective needs three system sites i, j, k");
  for (auto p : paulis)
    if (p == Pauli::I) throw ValidationError("system Paulis must be X, Y or Z");
  const double scale = g.lambda * g.lambda / g.delta;
  const double t = g.theta, f = g.phi;
  EffectiveCoefficients e{scale * std::pow(std::sin(2 * t), 2) * std::sin(2 * f),
                          scale * std::cos(f) * std::sin(4 * t), scale * std::sin(4 * t) * std::sin(f),
                          ops::SpinHamiltonian(num_spins)};
  const std::vector<MediatorCoupling> v = {{g.lambda, g.system_sites[0], paulis[0], Pauli::X},
                                           {g.lambda, g.system_sites[1], paulis[1], Pauli::Y},
                                           {g.lambda, g.system_sites[2], paulis[2], Pauli::Z}};
  auto x = expand_gadget(v, g.theta, g.phi, g.delta);
  ops::PauliSum loc = x.first_order;
  for (const auto& [s, c] : x.second_order.terms())
    if (s.weight() < 2) loc.add(c, s);
  e.h_loc = loc.to_spin_hamiltonian(num_spins, 1e-12 * std::max(1.0, g.lambda));
  return e;
}

Angles coupling_angles(Pauli p, Pauli q, double r) {
  if (p == q || p == Pauli::I || q == Pauli::I) throw ValidationError("coupling gadget needs two distinct Pauli axes");
  if (!(std::abs(r) <= 1.0))
    throw ValidationError(fmt::format("required coupling ratio {} exceeds the attainable maximum 1", r));
  if (p > q) std::swap(p, q);
  if (p == Pauli::X && q == Pauli::Y) {
    double phi = 0.5 * std::asin(r);
    if (phi < 0) phi += pi;
    return {pi / 4, phi};
  }
  if (p == Pauli::X && q == Pauli::Z) return {pi / 8, std::acos(r)};
  double phi = std::asin(r);  // {Y, Z}
  if (phi < 0) phi += 2 * pi;
  return {pi / 8, phi};
}

Angles frozen_angles(Pauli axis) {
  switch (axis) {
    case Pauli::Z: return {0, 0};
    case Pauli::X: return {pi / 4, 0};
    case Pauli::Y: return {pi / 4, pi / 2};
    case Pauli::I: break;
  }
  throw ValidationError("frozen axis must be X, Y or Z");
}

}  // namespace hred::gadget
