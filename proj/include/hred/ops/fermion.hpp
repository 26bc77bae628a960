#pragma once

// Fermionic ladder-operator algebra and occupation-number bases.
//
// Occupations are stored as bitmasks with mode k at bit k. Sign convention:
// a_k and a_k^dagger pick up (-1)^{number of occupied modes with index < k}.
// Written as a bitstring, mode 0 is the leftmost character.

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hred::ops {

using cplx = std::complex<double>;

struct Ladder {
  std::size_t mode = 0;
  bool creation = false;

  friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

using Monomial = std::vector<Ladder>;

// Sum of normal-ordered monomials: all creations left of all annihilations,
// mode indices ascending inside each group.
class FermionOperator {
 public:
  explicit FermionOperator(std::size_t num_modes);

  static FermionOperator scalar(std::size_t num_modes, cplx value);
  static FermionOperator number(std::size_t num_modes, std::size_t mode);
  // a^dagger_i a_j
  static FermionOperator hop(std::size_t num_modes, std::size_t i, std::size_t j);

  std::size_t num_modes() const noexcept { return num_modes_; }
  const std::map<Monomial, cplx>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  // `product` may be in any order; it is normal-ordered before storage.
  void add(cplx coefficient, const Monomial& product);

  FermionOperator adjoint() const;
  FermionOperator scaled(cplx factor) const;
  FermionOperator pruned(double tol = 0.0) const;
  bool conserves_particle_number() const;
  double max_abs_coefficient() const;

  FermionOperator& operator+=(const FermionOperator& other);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
    return a += b.scaled(-1.0);
  }
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

 private:
  void add_normal(cplx coefficient, Monomial product);

  std::size_t num_modes_;
  std::map<Monomial, cplx> terms_;
};

bool is_normal_ordered(const Monomial& m);

// Applies a monomial (rightmost ladder first) to an occupation bitmask.
// Returns the resulting sign and state, or nullopt if the state is annihilated.
std::optional<std::pair<int, std::uint64_t>> apply_monomial(const Monomial& m, std::uint64_t state);

// Occupation basis. With a particle number the basis is the lexicographic
// order of sorted occupied-mode lists (2 modes, 1 particle: |10>, |01>).
// The unrestricted space is ordered like the spin basis: integer value with
// mode 0 as the most significant bit.
class FockSector {
 public:
  FockSector(std::size_t num_modes, std::size_t num_particles);
  static FockSector full(std::size_t num_modes);

  std::size_t num_modes() const noexcept { return num_modes_; }
  std::optional<std::size_t> num_particles() const noexcept { return num_particles_; }
  std::size_t dimension() const noexcept { return states_.size(); }
  std::span<const std::uint64_t> states() const noexcept { return states_; }
  std::uint64_t state(std::size_t index) const { return states_.at(index); }
  std::optional<std::size_t> index_of(std::uint64_t state) const;
  std::string label(std::size_t index) const;

 private:
  FockSector(std::size_t num_modes, std::optional<std::size_t> num_particles,
             std::vector<std::uint64_t> states);

  std::size_t num_modes_;
  std::optional<std::size_t> num_particles_;
  std::vector<std::uint64_t> states_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::string occupation_string(std::uint64_t state, std::size_t num_modes);

}  // namespace hred::ops
