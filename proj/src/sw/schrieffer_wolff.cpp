#include "hred/sw/schrieffer_wolff.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/spectrum.hpp"

namespace hred::sw {

double spectral_norm(const MatrixXcd& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

namespace {

MatrixXcd orthonormal_columns(const MatrixXcd& basis) {
  Eigen::HouseholderQR<MatrixXcd> qr(basis);
  MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(basis.rows(), basis.cols());
  // reject rank deficiency
  const MatrixXcd r = qr.matrixQR().topRows(basis.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < r.cols(); ++i)
    if (std::abs(r(i, i)) < 1e-10) throw ValidationError("low-sector basis is rank deficient");
  return q;
}

MatrixXcd complement(const MatrixXcd& low) {
  const Eigen::Index n = low.rows();
  const MatrixXcd p = MatrixXcd::Identity(n, n) - low * low.adjoint();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (p + p.adjoint()));
  return es.eigenvectors().rightCols(n - low.cols());
}

double block_min(const MatrixXcd& h, const MatrixXcd& basis, bool smallest) {
  const MatrixXcd b = basis.adjoint() * h * basis;
  const Eigen::VectorXd ev = ops::eigenvalues_hermitian(0.5 * (b + b.adjoint()));
  return smallest ? ev(0) : ev(ev.size() - 1);
}

struct Blocks {
  MatrixXcd h0, h1, v0, v01, v1;
  MatrixXcd r1;  // (H1 - E0bar)^-1
  double e0bar = 0;
  double spread = 0;
};

Blocks make_blocks(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split) {
  ops::require_hermitian(h, "h");
  ops::require_hermitian(v, "v");
  if (h.rows() != v.rows() || split.low.rows() != h.rows() || split.high.rows() != h.rows())
    throw ValidationError("h, v and split have mismatched dimensions");
  const MatrixXcd& L = split.low;
  const MatrixXcd& Q = split.high;
  const double hnorm = std::max(spectral_norm(h), 1e-300);
  const MatrixXcd h01 = L.adjoint() * h * Q;
  if (h01.size() > 0 && spectral_norm(h01) > 1e-10 * hnorm)
    throw ValidationError(fmt::format("h is not block diagonal in the split basis (off-block norm {:.3e})",
                                      spectral_norm(h01)));
  Blocks b;
  b.h0 = L.adjoint() * h * L;
  b.h1 = Q.adjoint() * h * Q;
  b.v0 = L.adjoint() * v * L;
  b.v01 = L.adjoint() * v * Q;
  b.v1 = Q.adjoint() * v * Q;
  b.h0 = 0.5 * (b.h0 + b.h0.adjoint()).eval();
  b.h1 = 0.5 * (b.h1 + b.h1.adjoint()).eval();
  const Eigen::VectorXd low_ev = ops::eigenvalues_hermitian(b.h0);
  b.e0bar = low_ev.size() ? low_ev.mean() : 0.0;
  b.spread = low_ev.size() ? low_ev.maxCoeff() - low_ev.minCoeff() : 0.0;
  const MatrixXcd shifted = b.h1 - b.e0bar * MatrixXcd::Identity(b.h1.rows(), b.h1.cols());
  b.r1 = shifted.ldlt().solve(MatrixXcd::Identity(b.h1.rows(), b.h1.cols()));
  b.h0 -= b.e0bar * MatrixXcd::Identity(b.h0.rows(), b.h0.cols());
  return b;
}

MatrixXcd expm_antihermitian(const MatrixXcd& s) {
  // s = iK with K Hermitian
  const MatrixXcd k = std::complex<double>(0, -1) * s;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (k + k.adjoint()));
  const Eigen::VectorXcd phases =
      (std::complex<double>(0, 1) * es.eigenvalues().cast<std::complex<double>>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

BlockSplit split_blocks(const MatrixXcd& h, const SplitCriterion& criterion) {
  ops::require_hermitian(h, "h");
  BlockSplit split;
  if (const auto* t = std::get_if<ThresholdCriterion>(&criterion)) {
    const auto spec = ops::eig_hermitian(h);
    const double hnorm = spec.eigenvalues.size() ? spec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    Eigen::Index nlow = 0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
      const double e = spec.eigenvalues(i);
      if (std::abs(e - t->threshold) <= 1e-8 * hnorm)
        throw DegeneracyError(fmt::format("eigenvalue {} lies on the threshold {}", e, t->threshold));
      if (e < t->threshold) ++nlow;
    }
    if (nlow == 0 || nlow == spec.eigenvalues.size())
      throw DegeneracyError("threshold leaves one sector empty; no gap to split on");
    split.low = spec.eigenvectors.leftCols(nlow);
    split.high = spec.eigenvectors.rightCols(spec.eigenvalues.size() - nlow);
    split.gap = spec.eigenvalues(nlow) - spec.eigenvalues(nlow - 1);
  } else {
    const auto& p = std::get<ProjectorCriterion>(criterion);
    if (p.low_basis.rows() != h.rows() || p.low_basis.cols() == 0 || p.low_basis.cols() >= h.rows())
      throw ValidationError("low-sector basis must be a proper, nonempty subspace");
    split.low = orthonormal_columns(p.low_basis);
    split.high = complement(split.low);
    split.gap = block_min(h, split.high, true) - block_min(h, split.low, false);
  }
  if (!(split.gap > 0))
    throw ValidationError(fmt::format("split has no positive gap (gap = {})", split.gap));
  return split;
}

SWResult effective_hamiltonian(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split, double epsilon,
                               int order) {
  if (order != 1 && order != 2) throw ValidationError("order must be 1 or 2");
  if (!(split.gap > 0)) throw ValidationError("split gap must be positive");
  const Blocks b = make_blocks(h, v, split);
  const double vnorm = spectral_norm(v);
  if (std::abs(epsilon) * vnorm >= split.gap / 2)
    throw PerturbationRegimeError(fmt::format("eps*|v| = {:.4g} is not below gap/2 = {:.4g}",
                                              std::abs(epsilon) * vnorm, split.gap / 2));
  SWResult r;
  r.order = order;
  r.epsilon = epsilon;
  if (b.spread > split.gap / 10)
    r.warnings.push_back(fmt::format("low-sector spread {:.4g} exceeds gap/10 = {:.4g}", b.spread, split.gap / 10));
  const MatrixXcd id = MatrixXcd::Identity(b.h0.rows(), b.h0.cols());
  r.h_eff = b.h0 + b.e0bar * id + epsilon * b.v0;
  if (order == 2) r.h_eff -= epsilon * epsilon * b.v01 * b.r1 * b.v01.adjoint();
  r.h_eff = 0.5 * (r.h_eff + r.h_eff.adjoint()).eval();
  const double ev = std::abs(epsilon) * vnorm;
  r.error_budget = order == 2 ? ev * ev * ev / (split.gap * split.gap) : ev * ev / split.gap;
  return r;
}

GeneratorBlocks generator_blocks(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split) {
  const Blocks b = make_blocks(h, v, split);
  const MatrixXcd r2 = b.r1 * b.r1;
  GeneratorBlocks g;
  g.x1 = -b.v01 * b.r1;
  g.x2 = -b.h0 * b.v01 * r2 + b.v01 * b.r1 * b.v1 * b.r1 - b.v0 * b.v01 * r2;
  return g;
}

double block_residual(const MatrixXcd& h, const MatrixXcd& v, const BlockSplit& split, double epsilon) {
  const Blocks b = make_blocks(h, v, split);
  const MatrixXcd r2 = b.r1 * b.r1;
  const MatrixXcd x = epsilon * (-b.v01 * b.r1 - b.h0 * b.v01 * r2) +
                      epsilon * epsilon * (b.v01 * b.r1 * b.v1 * b.r1 - b.v0 * b.v01 * r2);
  const Eigen::Index nl = split.low.cols(), nh = split.high.cols(), n = nl + nh;
  MatrixXcd s = MatrixXcd::Zero(n, n);
  s.topRightCorner(nl, nh) = x;
  s.bottomLeftCorner(nh, nl) = -x.adjoint();
  MatrixXcd basis(n, n);
  basis << split.low, split.high;
  const MatrixXcd ht = basis.adjoint() * (h + epsilon * v) * basis;
  const MatrixXcd u = expm_antihermitian(s);
  const MatrixXcd rotated = u * ht * u.adjoint();
  return spectral_norm(rotated.topRightCorner(nl, nh));
}

}  // namespace hred::sw
