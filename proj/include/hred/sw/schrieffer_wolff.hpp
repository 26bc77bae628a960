#pragma once

// Second-order Schrieffer-Wolff reduction of h + eps*v onto the low sector of h.
//
// Blocks are taken in the split basis: H0 = L^dag h L, H1 = Q^dag h Q,
// V0 = L^dag v L, V01 = L^dag v Q, V1 = Q^dag v Q. The resolvent H1^{-1} is
// (H1 - E0bar)^{-1} with E0bar the mean eigenvalue of H0.

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace hred::sw {

using Eigen::MatrixXcd;

struct BlockSplit {
  MatrixXcd low;   // orthonormal columns
  MatrixXcd high;  // orthonormal complement
  double gap = 0;  // min high eigenvalue - max low eigenvalue of h
};

// Eigenvalues below the threshold form the low sector.
struct ThresholdCriterion {
  double threshold = 0;
};
// Explicit low-sector basis (columns, orthonormalized internally).
struct ProjectorCriterion {
  MatrixXcd low_basis;
};
using SplitCriterion = std::variant<ThresholdCriterion, ProjectorCriterion>;

BlockSplit split_blocks(const MatrixXcd& h, const SplitCriterion& criterion);

struct SWResult {
  MatrixXcd h_eff;  // in the split.low basis
  int order = 2;
  double error_budget = 0;
  double epsilon = 0;
  std::vector<std::string> warnings;
};

SWResult effective_hamiltonian(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split, double epsilon,
                               int order = 2);

struct GeneratorBlocks {
  MatrixXcd x1;  // -V01 H1^-1
  MatrixXcd x2;  // -H0 V01 H1^-2 + V01 H1^-1 V1 H1^-1 - V0 V01 H1^-2  (H0 shifted by E0bar)
};

GeneratorBlocks generator_blocks(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split);

// Norm of the low-high block of e^S (h + eps v) e^-S, where the low-high
// block of S is eps*X1 + eps^2*X2 (the H0 part of X2 is first order in eps
// and enters with eps) and S is anti-Hermitian.
double block_residual(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split, double epsilon);

double spectral_norm(const MatrixXcd& m);

}  // namespace hred::sw
