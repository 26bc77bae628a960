#pragma once

// Feynman-Kitaev history Hamiltonians on the legal domain-wall clock space.
//
// Clock state |t> for T gates is 1^t 0^(T-t). The basis of the returned matrix
// is |x> (x) |t> with index x*(T+1) + t, x read with computation spin 0 as the
// most significant bit. The propagation term is
//   H_prop = sum_t 1/2 [ |t><t| + |t-1><t-1| - U_t (x) |t><t-1| - U_t^dag (x) |t-1><t| ].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace hred::gadget {

struct Gate {
  std::vector<std::size_t> targets;  // 1 or 2 computation spins; first target is the high bit
  Eigen::MatrixXcd unitary;
  std::string label;
};

struct HistorySpec {
  std::size_t num_computation_spins = 1;
  std::vector<Gate> gates;
  // Input state; defaults to |0...0>.
  std::optional<Eigen::VectorXcd> input;
  // Optional penalty sum_i |1><1|_i (x) |0><0|_clock forcing these spins to |0> at t = 0.
  std::vector<std::size_t> init_penalty_spins;
  // Optional penalty |0><0|_out (x) |T><T|_clock (accepting output is |1>).
  std::optional<std::size_t> output_spin;
};

struct HistoryResult {
  Eigen::MatrixXcd hamiltonian;
  Eigen::VectorXcd history_state;
  Eigen::VectorXd low_spectrum;  // lowest min(dim, 2^n + 2) eigenvalues
  double history_energy = 0;
  double ground_energy = 0;
  double ground_overlap = 0;  // squared norm of the history state's projection on the ground space
  std::size_t ground_degeneracy = 0;
};

std::string encode_clock(std::size_t t, std::size_t num_gates);
// Throws ValidationError for an illegal clock string (not of the form 1...10...0).
std::size_t decode_clock(const std::string& bits);

// Full 2^n unitary of a gate acting on the listed targets.
Eigen::MatrixXcd embed_gate(const Gate& g, std::size_t num_spins);

HistoryResult build_history_hamiltonian(const HistorySpec& spec);

}  // namespace hred::gadget
