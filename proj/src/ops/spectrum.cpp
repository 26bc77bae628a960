#include "hred/ops/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::ops {

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0) return 0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

void require_hermitian(const Eigen::MatrixXcd& m, const char* what) {
  if (m.rows() != m.cols())
    throw ValidationError(fmt::format("{} is not square ({}x{})", what, m.rows(), m.cols()));
  const double d = hermiticity_defect(m);
  if (d > kHermiticityTolerance)
    throw ValidationError(fmt::format("{} is not Hermitian (relative defect {:.3e})", what, d));
}

Spectrum eig_hermitian(const Eigen::MatrixXcd& m) {
  require_hermitian(m);
  if (m.rows() == 0) return {};
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd eigenvalues_hermitian(const Eigen::MatrixXcd& m) {
  require_hermitian(m);
  if (m.rows() == 0) return {};
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

namespace {

Spectrum zheevr_lowest(const Eigen::MatrixXcd& m, std::size_t k, bool vectors) {
  require_hermitian(m);
  const auto n = static_cast<lapack_int>(m.rows());
  if (k == 0 || n == 0) return {Eigen::VectorXd(0), Eigen::MatrixXcd(n, 0)};
  k = std::min<std::size_t>(k, static_cast<std::size_t>(n));
  Eigen::MatrixXcd a = 0.5 * (m + m.adjoint());  // column major, overwritten
  lapack_int found = 0;
  Eigen::VectorXd w(n);
  Eigen::MatrixXcd z(n, vectors ? static_cast<Eigen::Index>(k) : 1);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1,
      static_cast<lapack_int>(k), 0.0, &found, w.data(), z.data(), n, isuppz.data());
  if (info != 0) throw Error(fmt::format("zheevr failed (info {})", info));
  Spectrum s;
  s.eigenvalues = w.head(found);
  if (vectors) s.eigenvectors = z.leftCols(found);
  return s;
}

}  // namespace

Spectrum lowest_eigenpairs(const Eigen::MatrixXcd& m, std::size_t k) { return zheevr_lowest(m, k, true); }

Eigen::VectorXd lowest_eigenvalues(const Eigen::MatrixXcd& m, std::size_t k) {
  return zheevr_lowest(m, k, false).eigenvalues;
}

namespace {

using Vec = Eigen::VectorXcd;

void orthogonalize(Vec& v, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) v -= b * b.dot(v);
}

}  // namespace

Spectrum lowest_eigenpairs_sparse(const SparseMatrix& m, std::size_t k, const LanczosOptions& opt) {
  const auto n = static_cast<std::size_t>(m.rows());
  if (m.rows() != m.cols()) throw ValidationError("sparse matrix is not square");
  k = std::min(k, n);
  double norm_est = 0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    double col = 0;
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) col += std::abs(it.value());
    norm_est = std::max(norm_est, col);
  }
  const double tol = opt.tolerance * std::max(norm_est, 1.0);

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  std::vector<Vec> locked;
  std::vector<double> values;

  while (locked.size() < k) {
    Vec start(static_cast<Eigen::Index>(n));
    for (auto& x : start) x = cplx(gauss(rng), gauss(rng));
    orthogonalize(start, locked);
    start.normalize();

    bool converged = false;
    double theta = 0;
    for (int restart = 0; restart < 200 && !converged; ++restart) {
      const std::size_t room = n - locked.size();
      const std::size_t mk = std::min(opt.max_krylov, room);
      std::vector<Vec> q{start};
      std::vector<double> alpha, beta;
      for (std::size_t j = 0; j < mk; ++j) {
        Vec w = m * q[j];
        alpha.push_back(q[j].dot(w).real());
        orthogonalize(w, locked);
        orthogonalize(w, q);
        const double b = w.norm();
        if (j + 1 == mk || b < 1e-14 * std::max(norm_est, 1.0)) break;
        beta.push_back(b);
        q.push_back(w / b);
      }
      const auto dim = static_cast<Eigen::Index>(alpha.size());
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < dim) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      theta = es.eigenvalues()(0);
      Vec ritz = Vec::Zero(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < dim; ++i) ritz += es.eigenvectors()(i, 0) * q[static_cast<std::size_t>(i)];
      orthogonalize(ritz, locked);
      ritz.normalize();
      Vec r = m * ritz;
      orthogonalize(r, locked);
      theta = ritz.dot(r).real();
      converged = (r - theta * ritz).norm() <= tol || static_cast<std::size_t>(dim) == room;
      start = ritz;
    }
    if (!converged) throw Error("Lanczos did not converge");
    locked.push_back(start);
    values.push_back(theta);
  }

  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  Spectrum s;
  s.eigenvalues.resize(static_cast<Eigen::Index>(k));
  s.eigenvectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    s.eigenvalues(static_cast<Eigen::Index>(i)) = values[order[i]];
    s.eigenvectors.col(static_cast<Eigen::Index>(i)) = locked[order[i]];
  }
  return s;
}

}  // namespace hred::ops
