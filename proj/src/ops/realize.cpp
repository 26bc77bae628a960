#include "hred/ops/realize.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::ops {

std::size_t dense_spin_limit() {
  if (const char* env = std::getenv("HRED_DENSE_SPINS")) {
    try {
      const long v = std::stol(env);
      if (v > 0 && v <= 20) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 14;
}

std::size_t dense_dimension_limit() { return std::size_t{1} << dense_spin_limit(); }

namespace {

// Visits the nonzero entries (row, col, value) of one Pauli term.
template <class Sink>
void for_each_entry(const PauliTerm& term, std::size_t n, Sink&& sink) {
  std::uint64_t flip = 0, zmask = 0, ymask = 0;
  for (const auto& f : term.factors()) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - f.site);
    if (f.axis == Pauli::X || f.axis == Pauli::Y) flip |= bit;
    if (f.axis == Pauli::Z) zmask |= bit;
    if (f.axis == Pauli::Y) ymask |= bit;
  }
  // Y|0> = i|1>, Y|1> = -i|0>
  static const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  const int ny = std::popcount(ymask);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const int sign = std::popcount(b & zmask) + std::popcount(b & ymask);
    cplx v = term.coefficient() * ipow[ny % 4];
    if (sign % 2) v = -v;
    sink(b ^ flip, b, v);
  }
}

template <class Sink>
void for_each_fermion_entry(const FermionOperator& op, const FockSector& sector, Sink&& sink) {
  if (op.num_modes() != sector.num_modes())
    throw ValidationError(fmt::format("operator has {} modes but sector has {}", op.num_modes(),
                                      sector.num_modes()));
  if (sector.num_particles() && !op.conserves_particle_number())
    throw ValidationError("operator changes particle number; cannot restrict to a fixed-N sector");
  for (std::size_t col = 0; col < sector.dimension(); ++col) {
    const auto s = sector.state(col);
    for (const auto& [m, c] : op.terms()) {
      const auto r = apply_monomial(m, s);
      if (!r) continue;
      const auto row = sector.index_of(r->second);
      if (!row) continue;
      sink(*row, col, c * static_cast<double>(r->first));
    }
  }
}

}  // namespace

Eigen::MatrixXcd realize_spin(const SpinHamiltonian& h) {
  const std::size_t n = h.num_spins();
  if (n > dense_spin_limit())
    throw ResourceError(fmt::format("{} spins exceed the dense limit of {}", n, dense_spin_limit()));
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms())
    for_each_entry(t, n, [&](std::uint64_t r, std::uint64_t c, cplx v) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v;
    });
  return m;
}

SparseMatrix realize_spin_sparse(const SpinHamiltonian& h) {
  const std::size_t n = h.num_spins();
  if (n > 30) throw ResourceError(fmt::format("{} spins too many for sparse realization", n));
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  std::vector<Eigen::Triplet<cplx>> entries;
  for (const auto& t : h.terms())
    for_each_entry(t, n, [&](std::uint64_t r, std::uint64_t c, cplx v) {
      entries.emplace_back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c), v);
    });
  SparseMatrix m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  m.prune(cplx(0.0));
  return m;
}

Eigen::MatrixXcd realize_fermion(const FermionOperator& op, const FockSector& sector) {
  if (sector.dimension() > dense_dimension_limit())
    throw ResourceError(fmt::format("sector dimension {} exceeds the dense limit {}",
                                    sector.dimension(), dense_dimension_limit()));
  const auto dim = static_cast<Eigen::Index>(sector.dimension());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for_each_fermion_entry(op, sector, [&](std::size_t r, std::size_t c, cplx v) {
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v;
  });
  return m;
}

SparseMatrix realize_fermion_sparse(const FermionOperator& op, const FockSector& sector) {
  const auto dim = static_cast<Eigen::Index>(sector.dimension());
  std::vector<Eigen::Triplet<cplx>> entries;
  for_each_fermion_entry(op, sector, [&](std::size_t r, std::size_t c, cplx v) {
    entries.emplace_back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c), v);
  });
  SparseMatrix m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

}  // namespace hred::ops
