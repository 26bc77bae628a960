#include "hred/ops/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::ops {

namespace {

// Creations sort before annihilations, then by mode.
std::pair<int, std::size_t> rank(const Ladder& l) { return {l.creation ? 0 : 1, l.mode}; }

}  // namespace

bool is_normal_ordered(const Monomial& m) {
  for (std::size_t k = 1; k < m.size(); ++k)
    if (!(rank(m[k - 1]) < rank(m[k]))) return false;
  return true;
}

FermionOperator::FermionOperator(std::size_t num_modes) : num_modes_(num_modes) {
  if (num_modes == 0) throw ValidationError("fermion operator needs at least one mode");
  if (num_modes > 62) throw ResourceError("at most 62 fermionic modes are supported");
}

FermionOperator FermionOperator::scalar(std::size_t num_modes, cplx value) {
  FermionOperator op(num_modes);
  op.add(value, {});
  return op;
}

FermionOperator FermionOperator::number(std::size_t num_modes, std::size_t mode) {
  return hop(num_modes, mode, mode);
}

FermionOperator FermionOperator::hop(std::size_t num_modes, std::size_t i, std::size_t j) {
  FermionOperator op(num_modes);
  op.add(1.0, {{i, true}, {j, false}});
  return op;
}

void FermionOperator::add(cplx coefficient, const Monomial& product) {
  for (const auto& l : product)
    if (l.mode >= num_modes_)
      throw ValidationError(fmt::format("mode {} out of range for {} modes", l.mode, num_modes_));
  if (coefficient == 0.0) return;

  std::vector<std::pair<cplx, Monomial>> work{{coefficient, product}};
  while (!work.empty()) {
    auto [c, m] = std::move(work.back());
    work.pop_back();
    bool done = true;
    for (std::size_t k = 0; k + 1 < m.size(); ++k) {
      const auto ra = rank(m[k]), rb = rank(m[k + 1]);
      if (ra < rb) continue;
      done = false;
      if (ra == rb) break;  // same ladder twice: zero
      if (!m[k].creation && m[k + 1].creation && m[k].mode == m[k + 1].mode) {
        Monomial contracted;
        contracted.reserve(m.size() - 2);
        contracted.insert(contracted.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k));
        contracted.insert(contracted.end(), m.begin() + static_cast<std::ptrdiff_t>(k + 2), m.end());
        work.emplace_back(c, std::move(contracted));
      }
      std::swap(m[k], m[k + 1]);
      work.emplace_back(-c, std::move(m));
      break;
    }
    if (done) add_normal(c, std::move(m));
  }
}

void FermionOperator::add_normal(cplx coefficient, Monomial product) {
  auto [it, inserted] = terms_.emplace(std::move(product), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(num_modes_);
  for (const auto& [m, c] : terms_) {
    Monomial r(m.rbegin(), m.rend());
    for (auto& l : r) l.creation = !l.creation;
    out.add(std::conj(c), r);
  }
  return out;
}

FermionOperator FermionOperator::scaled(cplx factor) const {
  FermionOperator out(num_modes_);
  if (factor == 0.0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
  return out;
}

FermionOperator FermionOperator::pruned(double tol) const {
  FermionOperator out(num_modes_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace(m, c);
  return out;
}

bool FermionOperator::conserves_particle_number() const {
  for (const auto& [m, c] : terms_) {
    const auto created = std::count_if(m.begin(), m.end(), [](const Ladder& l) { return l.creation; });
    if (2 * static_cast<std::size_t>(created) != m.size()) return false;
  }
  return true;
}

double FermionOperator::max_abs_coefficient() const {
  double best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, std::abs(c));
  return best;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (other.num_modes_ != num_modes_)
    throw ValidationError("adding fermion operators with different mode counts");
  for (const auto& [m, c] : other.terms_) add_normal(c, m);
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  if (a.num_modes_ != b.num_modes_)
    throw ValidationError("multiplying fermion operators with different mode counts");
  FermionOperator out(a.num_modes_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(ca * cb, m);
    }
  return out;
}

std::optional<std::pair<int, std::uint64_t>> apply_monomial(const Monomial& m, std::uint64_t state) {
  int sign = 1;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t{1} << it->mode;
    const bool occupied = (state & bit) != 0;
    if (occupied == it->creation) return std::nullopt;
    if (std::popcount(state & (bit - 1)) % 2) sign = -sign;
    state ^= bit;
  }
  return std::make_pair(sign, state);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::uint64_t acc,
                  std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t m = start; m + k <= n; ++m)
    combinations(n, k - 1, m + 1, acc | (std::uint64_t{1} << m), out);
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

constexpr double kMaxSectorDimension = 1 << 24;

}  // namespace

FockSector::FockSector(std::size_t num_modes, std::optional<std::size_t> num_particles,
                       std::vector<std::uint64_t> states)
    : num_modes_(num_modes), num_particles_(num_particles), states_(std::move(states)) {
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

FockSector::FockSector(std::size_t num_modes, std::size_t num_particles)
    : FockSector(num_modes, num_particles, {}) {
  if (num_modes == 0 || num_modes > 62) throw ValidationError("mode count must be in 1..62");
  if (num_particles > num_modes)
    throw ValidationError(fmt::format("{} particles do not fit in {} modes", num_particles, num_modes));
  if (binomial(num_modes, num_particles) > kMaxSectorDimension)
    throw ResourceError(fmt::format("sector C({}, {}) too large", num_modes, num_particles));
  combinations(num_modes, num_particles, 0, 0, states_);
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

FockSector FockSector::full(std::size_t num_modes) {
  if (num_modes == 0 || num_modes > 24)
    throw ResourceError(fmt::format("full Fock space of {} modes not supported", num_modes));
  const std::size_t dim = std::size_t{1} << num_modes;
  std::vector<std::uint64_t> states(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    // v is read with mode 0 as its most significant bit
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < num_modes; ++k)
      if (v >> (num_modes - 1 - k) & 1) s |= std::uint64_t{1} << k;
    states[v] = s;
  }
  return FockSector(num_modes, std::nullopt, std::move(states));
}

std::optional<std::size_t> FockSector::index_of(std::uint64_t state) const {
  auto it = index_.find(state);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FockSector::label(std::size_t index) const {
  return occupation_string(states_.at(index), num_modes_);
}

std::string occupation_string(std::uint64_t state, std::size_t num_modes) {
  std::string s(num_modes, '0');
  for (std::size_t k = 0; k < num_modes; ++k)
    if (state >> k & 1) s[k] = '1';
  return s;
}

}  // namespace hred::ops
