#pragma once

// Ising spin glasses on the open L x L x 2 grid, their embedding into a
// half-filled fermionic Hamiltonian, and an exhaustive ground-state oracle.
//
// Site (x, y, z) has index z L^2 + y L + x. A configuration is a bitmask with
// site 0 as the most significant of 2 L^2 bits; bit 0 means spin up (S = +1).
// Site i uses modes 2i (up) and 2i + 1 (down).
//
// Text format:
//   ising L
//   i j J     # J in {-1, 0, 1}, (i, j) nearest neighbours

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hred/scf/hamiltonian.hpp"
#include "hred/scf/slater.hpp"

namespace hred::scf {

struct IsingEdge {
  std::size_t i = 0, j = 0;
  int J = 0;

  friend bool operator==(const IsingEdge&, const IsingEdge&) = default;
};

struct IsingInstance {
  std::size_t L = 1;
  std::vector<IsingEdge> edges;

  std::size_t num_sites() const { return 2 * L * L; }
  void validate() const;

  friend bool operator==(const IsingInstance&, const IsingInstance&) = default;
};

bool grid_neighbours(std::size_t L, std::size_t i, std::size_t j);
// Every nearest-neighbour edge, J drawn uniformly from {-1, 0, 1}.
IsingInstance random_ising(std::size_t L, std::uint64_t seed);

// sum_edges J_ij S_i S_j
double ising_energy(const IsingInstance& inst, std::uint64_t config);

struct IsingGround {
  double energy = 0;
  std::uint64_t config = 0;
};

// Exhaustive search; the smallest configuration wins ties.
IsingGround ising_oracle(const IsingInstance& inst, std::size_t max_L = 3);

double default_penalty(const IsingInstance& inst);
// U sum_i n_i,up n_i,down + sum_edges J (n_2i - n_2i+1)(n_2j - n_2j+1).
// Requires U >= 4 * (number of edges).
SecondQuantizedHamiltonian embed_ising(const IsingInstance& inst, double U);

SlaterState classical_state(std::size_t num_sites, std::uint64_t config);
// Spin configuration of a determinant with one electron per site, or nothing
// if some orbital weight sits off the classical modes.
std::optional<std::uint64_t> classical_config(const SlaterState& s, double tol = 1e-6);

std::string format_ising(const IsingInstance& inst);
IsingInstance parse_ising(std::string_view text);

std::string config_string(std::uint64_t config, std::size_t num_sites);

}  // namespace hred::scf
