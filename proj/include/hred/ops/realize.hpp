#pragma once

#include <cstddef>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hred/ops/fermion.hpp"
#include "hred/ops/pauli.hpp"

namespace hred::ops {

using SparseMatrix = Eigen::SparseMatrix<cplx>;

// Largest spin count realized densely. Reads HRED_DENSE_SPINS, default 14.
std::size_t dense_spin_limit();
std::size_t dense_dimension_limit();

// Throws ResourceError above the dense limit.
Eigen::MatrixXcd realize_spin(const SpinHamiltonian& h);
// No dense limit; capped at 30 spins.
SparseMatrix realize_spin_sparse(const SpinHamiltonian& h);

// Rejects particle-number-changing monomials when the sector fixes N.
Eigen::MatrixXcd realize_fermion(const FermionOperator& op, const FockSector& sector);
SparseMatrix realize_fermion_sparse(const FermionOperator& op, const FockSector& sector);

}  // namespace hred::ops
