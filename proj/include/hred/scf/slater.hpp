#pragma once

// Single Slater determinants b^dag_1 ... b^dag_N |0> with b^dag_k = sum_i u_ik a^dag_i.
// The one-body density is D_ij = <a^dag_i a_j> = sum_k conj(u_ik) u_jk and
// two-body expectations follow from Wick's theorem:
//   <a^dag_i a^dag_j a_k a_l> = D_il D_jk - D_ik D_jl.

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "hred/ops/fermion.hpp"
#include "hred/scf/hamiltonian.hpp"

namespace hred::scf {

using ops::cplx;

struct SlaterState {
  Eigen::MatrixXcd u;  // modes x particles, orthonormal columns

  std::size_t modes() const { return static_cast<std::size_t>(u.rows()); }
  std::size_t particles() const { return static_cast<std::size_t>(u.cols()); }
  // Throws ValidationError unless u^dag u = 1 to 1e-10.
  void validate() const;
};

// Optional one-body exchange-correlation term added to the mean-field
// operator and to the energy as sum_ij v_ij D_ij.
struct XCPotential {
  Eigen::MatrixXcd v;
};

Eigen::MatrixXcd density_matrix(const SlaterState& s);

double energy(const SecondQuantizedHamiltonian& h, const SlaterState& s,
              const std::optional<XCPotential>& xc = std::nullopt);
double energy_from_density(const SecondQuantizedHamiltonian& h, const Eigen::MatrixXcd& d,
                           const std::optional<XCPotential>& xc = std::nullopt);

// F_ij = dE/dD_ij (Hermitian part), so E changes by sum_ij F_ij dD_ij.
Eigen::MatrixXcd fock_matrix(const SecondQuantizedHamiltonian& h, const Eigen::MatrixXcd& d,
                             const std::optional<XCPotential>& xc = std::nullopt);

// Amplitudes of the determinant on the fixed-particle Fock sector.
Eigen::VectorXcd fock_vector(const SlaterState& s, const ops::FockSector& sector);

}  // namespace hred::scf
