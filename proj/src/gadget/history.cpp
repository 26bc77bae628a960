#include "hred/gadget/history.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/spectrum.hpp"

namespace hred::gadget {

std::string encode_clock(std::size_t t, std::size_t num_gates) {
  if (t > num_gates) throw ValidationError(fmt::format("clock time {} exceeds T = {}", t, num_gates));
  return std::string(t, '1') + std::string(num_gates - t, '0');
}

std::size_t decode_clock(const std::string& bits) {
  std::size_t t = 0;
  while (t < bits.size() && bits[t] == '1') ++t;
  for (std::size_t k = t; k < bits.size(); ++k)
    if (bits[k] != '0') throw ValidationError(fmt::format("'{}' is not a legal domain-wall clock state", bits));
  return t;
}

Eigen::MatrixXcd embed_gate(const Gate& g, std::size_t n) {
  const std::size_t k = g.targets.size();
  if (k == 0 || k > 2) throw ValidationError("gates act on one or two spins");
  std::set<std::size_t> uniq(g.targets.begin(), g.targets.end());
  if (uniq.size() != k) throw ValidationError("gate targets must be distinct");
  for (auto t : g.targets)
    if (t >= n) throw ValidationError(fmt::format("gate target {} out of range", t));
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  if (g.unitary.rows() != d || g.unitary.cols() != d)
    throw ValidationError(fmt::format("gate '{}' needs a {}x{} matrix", g.label, d, d));
  if ((g.unitary.adjoint() * g.unitary - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12)
    throw ValidationError(fmt::format("gate '{}' is not unitary", g.label));

  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  auto bit = [&](std::size_t x, std::size_t site) { return (x >> (n - 1 - site)) & 1; };
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t local_in = 0;
    for (auto t : g.targets) local_in = local_in << 1 | bit(col, t);
    for (std::size_t local_out = 0; local_out < (std::size_t{1} << k); ++local_out) {
      std::size_t row = col;
      for (std::size_t q = 0; q < k; ++q) {
        const std::size_t mask = std::size_t{1} << (n - 1 - g.targets[q]);
        const bool on = (local_out >> (k - 1 - q)) & 1;
        row = on ? (row | mask) : (row & ~mask);
      }
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          g.unitary(static_cast<Eigen::Index>(local_out), static_cast<Eigen::Index>(local_in));
    }
  }
  return u;
}

HistoryResult build_history_hamiltonian(const HistorySpec& spec) {
  const std::size_t n = spec.num_computation_spins;
  const std::size_t T = spec.gates.size();
  if (n == 0 || n > 3) throw ValidationError("history construction supports 1 to 3 computation spins");
  if (T == 0 || T > 8) throw ValidationError("history construction supports 1 to 8 gates");
  const std::size_t cdim = std::size_t{1} << n;
  const std::size_t dim = cdim * (T + 1);
  auto idx = [&](std::size_t x, std::size_t t) { return static_cast<Eigen::Index>(x * (T + 1) + t); };

  std::vector<Eigen::MatrixXcd> us;
  for (const auto& g : spec.gates) us.push_back(embed_gate(g, n));

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t t = 1; t <= T; ++t) {
    const auto& u = us[t - 1];
    for (std::size_t x = 0; x < cdim; ++x) {
      h(idx(x, t), idx(x, t)) += 0.5;
      h(idx(x, t - 1), idx(x, t - 1)) += 0.5;
      for (std::size_t y = 0; y < cdim; ++y) {
        const auto uyx = u(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
        h(idx(y, t), idx(x, t - 1)) -= 0.5 * uyx;
        h(idx(x, t - 1), idx(y, t)) -= 0.5 * std::conj(uyx);
      }
    }
  }
  for (auto s : spec.init_penalty_spins) {
    if (s >= n) throw ValidationError(fmt::format("penalty spin {} out of range", s));
    for (std::size_t x = 0; x < cdim; ++x)
      if ((x >> (n - 1 - s)) & 1) h(idx(x, 0), idx(x, 0)) += 1.0;
  }
  if (spec.output_spin) {
    if (*spec.output_spin >= n) throw ValidationError("output spin out of range");
    for (std::size_t x = 0; x < cdim; ++x)
      if (!((x >> (n - 1 - *spec.output_spin)) & 1)) h(idx(x, T), idx(x, T)) += 1.0;
  }

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cdim));
  if (spec.input) {
    if (spec.input->size() != static_cast<Eigen::Index>(cdim)) throw ValidationError("input state has wrong dimension");
    const double norm = spec.input->norm();
    if (!(norm > 0)) throw ValidationError("input state is zero");
    psi = *spec.input / norm;
  } else {
    psi(0) = 1.0;
  }

  HistoryResult r;
  r.history_state = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t t = 0; t <= T; ++t) {
    for (std::size_t x = 0; x < cdim; ++x) r.history_state(idx(x, t)) = psi(static_cast<Eigen::Index>(x));
    if (t < T) psi = us[t] * psi;
  }
  r.history_state /= std::sqrt(static_cast<double>(T + 1));
  r.hamiltonian = h;
  r.history_energy = r.history_state.dot(h * r.history_state).real();

  const auto spec_full = ops::eig_hermitian(h);
  r.ground_energy = spec_full.eigenvalues(0);
  const double tol = 1e-9;
  Eigen::Index g = 0;
  while (g < spec_full.eigenvalues.size() && spec_full.eigenvalues(g) <= r.ground_energy + tol) ++g;
  r.ground_degeneracy = static_cast<std::size_t>(g);
  const Eigen::VectorXcd proj = spec_full.eigenvectors.leftCols(g).adjoint() * r.history_state;
  r.ground_overlap = proj.squaredNorm();
  r.low_spectrum = spec_full.eigenvalues.head(std::min<Eigen::Index>(spec_full.eigenvalues.size(),
                                                                    static_cast<Eigen::Index>(cdim + 2)));
  return r;
}

}  // namespace hred::gadget
