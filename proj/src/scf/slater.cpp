#include "hred/scf/slater.hpp"

#include <bit>

#include <Eigen/LU>
#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::scf {

void SlaterState::validate() const {
  if (u.cols() == 0 || u.cols() > u.rows())
    throw ValidationError(fmt::format("a determinant needs 1 <= N <= M (N = {}, M = {})", u.cols(), u.rows()));
  const Eigen::MatrixXcd g = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols());
  if (g.cwiseAbs().maxCoeff() > 1e-10) throw ValidationError("orbital matrix columns are not orthonormal");
}

Eigen::MatrixXcd density_matrix(const SlaterState& s) {
  s.validate();
  return s.u.conjugate() * s.u.transpose();
}

namespace {

void check_shapes(const SecondQuantizedHamiltonian& h, const Eigen::MatrixXcd& d,
                  const std::optional<XCPotential>& xc) {
  const auto m = static_cast<Eigen::Index>(h.modes);
  if (d.rows() != m || d.cols() != m)
    throw ValidationError(fmt::format("density has shape {}x{}, Hamiltonian has {} modes", d.rows(), d.cols(), m));
  if (xc && (xc->v.rows() != m || xc->v.cols() != m))
    throw ValidationError("exchange-correlation matrix has the wrong shape");
}

}  // namespace

double energy_from_density(const SecondQuantizedHamiltonian& h, const Eigen::MatrixXcd& d,
                           const std::optional<XCPotential>& xc) {
  check_shapes(h, d, xc);
  // sum_ij h_ij D_ij
  cplx e = h.constant + (h.one_body.cast<cplx>().cwiseProduct(d)).sum();
  if (xc) e += xc->v.cwiseProduct(d).sum();
  for (const auto& [idx, v] : h.two_body) {
    const auto [i, j, k, l] = idx;
    auto D = [&](std::size_t a, std::size_t b) {
      return d(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    };
    e += 0.5 * v * (D(i, l) * D(j, k) - D(i, k) * D(j, l));
  }
  return e.real();
}

double energy(const SecondQuantizedHamiltonian& h, const SlaterState& s, const std::optional<XCPotential>& xc) {
  return energy_from_density(h, density_matrix(s), xc);
}

Eigen::MatrixXcd fock_matrix(const SecondQuantizedHamiltonian& h, const Eigen::MatrixXcd& d,
                             const std::optional<XCPotential>& xc) {
  check_shapes(h, d, xc);
  Eigen::MatrixXcd f = h.one_body.cast<cplx>();
  if (xc) f += xc->v;
  auto at = [](std::size_t a, std::size_t b) { return std::pair{static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)}; };
  for (const auto& [idx, v] : h.two_body) {
    const auto [i, j, k, l] = idx;
    const double c = 0.5 * v;
    auto D = [&](std::size_t a, std::size_t b) {
      const auto [r, s] = at(a, b);
      return d(r, s);
    };
    auto F = [&](std::size_t a, std::size_t b) -> cplx& {
      const auto [r, s] = at(a, b);
      return f(r, s);
    };
    // derivative of c (D_il D_jk - D_ik D_jl)
    F(i, l) += c * D(j, k);
    F(j, k) += c * D(i, l);
    F(i, k) -= c * D(j, l);
    F(j, l) -= c * D(i, k);
  }
  return 0.5 * (f + f.adjoint());
}

Eigen::VectorXcd fock_vector(const SlaterState& s, const ops::FockSector& sector) {
  s.validate();
  if (sector.num_modes() != s.modes() || sector.num_particles() != s.particles())
    throw ValidationError("sector does not match the determinant's modes and particle count");
  const auto n = static_cast<Eigen::Index>(s.particles());
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(sector.dimension()));
  // b^dag_1 ... b^dag_N |0> (column 0 applied last) expands to
  // sum over occupied sets {m_1 < ... < m_N} of det(u[m, :]) a^dag_m1 ... a^dag_mN |0>.
  for (std::size_t k = 0; k < sector.dimension(); ++k) {
    const std::uint64_t st = sector.state(k);
    Eigen::MatrixXcd sub(n, n);
    Eigen::Index r = 0;
    for (std::size_t mode = 0; mode < s.modes(); ++mode)
      if ((st >> mode) & 1) sub.row(r++) = s.u.row(static_cast<Eigen::Index>(mode));
    psi(static_cast<Eigen::Index>(k)) = sub.determinant();
  }
  return psi;
}

}  // namespace hred::scf
