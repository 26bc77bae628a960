#include "hred/ops/jordan.hpp"

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::ops {

SiteModes interleaved_modes(std::size_t num_sites) {
  SiteModes m;
  for (std::size_t i = 0; i < num_sites; ++i) m[i] = {2 * i, 2 * i + 1};
  return m;
}

FermionOperator jordan_map_spin_to_fermion(const PauliTerm& p, const SiteModes& modes, std::size_t num_modes) {
  FermionOperator out = FermionOperator::scalar(num_modes, p.coefficient());
  for (const auto& f : p.factors()) {
    auto it = modes.find(f.site);
    if (it == modes.end()) throw ValidationError(fmt::format("site {} has no mode assignment", f.site));
    const std::size_t m[2] = {it->second.first, it->second.second};
    const Eigen::Matrix2cd pm = pauli_matrix(f.axis);
    FermionOperator bilinear(num_modes);
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        if (pm(s, t) != 0.0) bilinear.add(pm(s, t), {{m[s], true}, {m[t], false}});
    out = out * bilinear;
  }
  return out;
}

FermionOperator jordan_map_spin_to_fermion(const SpinHamiltonian& h, const SiteModes& modes,
                                           std::size_t num_modes) {
  FermionOperator out(num_modes);
  for (const auto& t : h.terms()) out += jordan_map_spin_to_fermion(t, modes, num_modes);
  return out;
}

}  // namespace hred::ops
