#pragma once

// Real second-quantized Hamiltonians
//
//   H = c + sum_ij h_ij a^dag_i a_j + 1/2 sum_ijkl h_ijkl a^dag_i a^dag_j a_k a_l
//
// (physicists' ordering: the pair (k, l) is annihilated as a_k a_l, so
// n_a n_b for a != b is h_abba = h_baab = 1). The tensor is stored sparsely and
// need not be antisymmetrized; Hermiticity is checked on the realized operator.
//
// Text format:
//   modes M
//   constant c        (optional)
//   1 i j value
//   2 i j k l value
// Repeated entries accumulate.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "hred/ops/fermion.hpp"

namespace hred::scf {

using TwoBodyIndex = std::array<std::size_t, 4>;

struct SecondQuantizedHamiltonian {
  std::size_t modes = 0;
  Eigen::MatrixXd one_body;  // modes x modes
  std::map<TwoBodyIndex, double> two_body;
  double constant = 0;

  static SecondQuantizedHamiltonian zero(std::size_t modes);
  void add_one_body(std::size_t i, std::size_t j, double value);
  void add_two_body(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double value);

  ops::FermionOperator to_operator() const;
  // Throws ValidationError on shape, index or Hermiticity problems.
  void validate() const;

  friend bool operator==(const SecondQuantizedHamiltonian& a, const SecondQuantizedHamiltonian& b) {
    return a.modes == b.modes && a.one_body == b.one_body && a.two_body == b.two_body && a.constant == b.constant;
  }
};

std::string format_second_quantized(const SecondQuantizedHamiltonian& h);
SecondQuantizedHamiltonian parse_second_quantized(std::string_view text);

}  // namespace hred::scf
