#pragma once

// Independent reference constructions used by the unit tests. Nothing here
// calls into the library's realization code.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;

inline MatrixXcd pauli(char a) {
  MatrixXcd m(2, 2);
  switch (a) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = MatrixXcd::Identity(2, 2);
  }
  return m;
}

// Kronecker product with site 0 leftmost.
inline MatrixXcd kron_chain(const std::vector<MatrixXcd>& factors) {
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  for (const auto& f : factors) out = Eigen::kroneckerProduct(out, f).eval();
  return out;
}

// axes[i] in {'I','X','Y','Z'} for site i
inline MatrixXcd pauli_string(const std::string& axes) {
  std::vector<MatrixXcd> f;
  for (char c : axes) f.push_back(pauli(c));
  return kron_chain(f);
}

// Annihilator of mode k on the full Fock space of n modes, mode 0 the most
// significant bit, sign (-1)^(occupied modes below k).
inline MatrixXcd annihilator(std::size_t k, std::size_t n) {
  MatrixXcd lower(2, 2);
  lower << 0, 1, 0, 0;  // |0><1|
  std::vector<MatrixXcd> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(i < k ? pauli('Z') : i == k ? lower : pauli('I'));
  return kron_chain(f);
}

inline Eigen::VectorXd eigenvalues(const MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Columns of the full 2^n Fock space that have exactly `particles` bits set,
// in the library's sector order (lexicographic in the sorted occupied lists,
// i.e. descending integer value with mode 0 as MSB).
inline std::vector<std::size_t> sector_columns(std::size_t n, std::size_t particles) {
  std::vector<std::size_t> cols;
  for (std::size_t x = (std::size_t{1} << n); x-- > 0;)
    if (static_cast<std::size_t>(__builtin_popcountll(x)) == particles) cols.push_back(x);
  return cols;
}

inline MatrixXcd restrict(const MatrixXcd& m, const std::vector<std::size_t>& cols) {
  const auto d = static_cast<Eigen::Index>(cols.size());
  MatrixXcd out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      out(i, j) = m(static_cast<Eigen::Index>(cols[i]), static_cast<Eigen::Index>(cols[j]));
  return out;
}

inline MatrixXcd random_hermitian(std::size_t dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  const auto d = static_cast<Eigen::Index>(dim);
  MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  return scale * 0.5 * (a + a.adjoint());
}

}  // namespace oracle

namespace oracle {

// Random unitary (QR of a complex Gaussian matrix).
inline MatrixXcd random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const auto d = static_cast<Eigen::Index>(dim);
  MatrixXcd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<MatrixXcd> qr(a);
  return qr.householderQ() * MatrixXcd::Identity(d, d);
}

// 3-spin gapped instance: degenerate low sector of dimension 4 at energy 0,
// high levels drawn from [gap, gap + 2], rotated by a random unitary;
// v random Hermitian with spectral norm 1.
struct GappedInstance {
  MatrixXcd h, v, low;
  double gap = 1;
};

inline GappedInstance random_gapped(std::mt19937_64& rng, double gap = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 2.0);
  GappedInstance inst;
  inst.gap = gap;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(8);
  for (int i = 4; i < 8; ++i) d(i) = gap + u(rng);
  d(4) = gap;  // pin the gap exactly
  const MatrixXcd q = random_unitary(8, rng);
  inst.h = q * d.cast<cplx>().asDiagonal() * q.adjoint();
  inst.h = 0.5 * (inst.h + inst.h.adjoint()).eval();
  inst.low = q.leftCols(4);
  MatrixXcd v = random_hermitian(8, rng);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(v, Eigen::EigenvaluesOnly);
  v /= es.eigenvalues().cwiseAbs().maxCoeff();
  inst.v = v;
  return inst;
}

}  // namespace oracle
