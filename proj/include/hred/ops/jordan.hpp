#pragma once

// Spin operators as fermionic bilinears: P_i = sum_{s,s'} P_{s s'} a^dagger_{i s} a_{i s'},
// with s = 0 the up mode (Z = +1).

#include <cstddef>
#include <map>
#include <utility>

#include "hred/ops/fermion.hpp"
#include "hred/ops/pauli.hpp"

namespace hred::ops {

// site -> (up mode, down mode)
using SiteModes = std::map<std::size_t, std::pair<std::size_t, std::size_t>>;

// Sites 0..n-1 mapped to modes (2i, 2i+1).
SiteModes interleaved_modes(std::size_t num_sites);

FermionOperator jordan_map_spin_to_fermion(const PauliTerm& p, const SiteModes& modes, std::size_t num_modes);
FermionOperator jordan_map_spin_to_fermion(const SpinHamiltonian& h, const SiteModes& modes,
                                           std::size_t num_modes);

}  // namespace hred::ops
