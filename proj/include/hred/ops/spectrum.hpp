#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "hred/ops/realize.hpp"

namespace hred::ops {

struct Spectrum {
  Eigen::VectorXd eigenvalues;    // ascending
  Eigen::MatrixXcd eigenvectors;  // columns, orthonormal
};

inline constexpr double kHermiticityTolerance = 1e-10;

// max |M - M^dagger| / max(max |M|, tiny)
double hermiticity_defect(const Eigen::MatrixXcd& m);
// Throws ValidationError when the relative defect exceeds kHermiticityTolerance.
void require_hermitian(const Eigen::MatrixXcd& m, const char* what = "matrix");

Spectrum eig_hermitian(const Eigen::MatrixXcd& m);
Eigen::VectorXd eigenvalues_hermitian(const Eigen::MatrixXcd& m);

// Lowest k eigenpairs of a dense Hermitian matrix (LAPACK zheevr, index range).
Spectrum lowest_eigenpairs(const Eigen::MatrixXcd& m, std::size_t k);
Eigen::VectorXd lowest_eigenvalues(const Eigen::MatrixXcd& m, std::size_t k);

struct LanczosOptions {
  std::size_t max_krylov = 400;
  double tolerance = 1e-10;
  unsigned seed = 0;
};

// Lowest k eigenpairs of a sparse Hermitian matrix by restarted Lanczos with
// full reorthogonalization. Degenerate eigenvalues are resolved by deflating
// converged vectors between restarts.
Spectrum lowest_eigenpairs_sparse(const SparseMatrix& m, std::size_t k, const LanczosOptions& opt = {});

}  // namespace hred::ops
