#include "hred/ops/pauli.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::ops {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
  }
  throw ValidationError(fmt::format("unknown Pauli axis '{}'", c));
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  const cplx i(0, 1);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

std::pair<cplx, Pauli> multiply(Pauli a, Pauli b) {
  if (a == Pauli::I) return {1.0, b};
  if (b == Pauli::I) return {1.0, a};
  if (a == b) return {1.0, Pauli::I};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  const int ic = 6 - ia - ib;
  // XY = iZ, YZ = iX, ZX = iY
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? cplx(0, 1) : cplx(0, -1), static_cast<Pauli>(ic)};
}

PauliString PauliString::from_factors(std::vector<PauliFactor> factors) {
  std::sort(factors.begin(), factors.end());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].axis == Pauli::I)
      throw ValidationError(fmt::format("identity factor on site {}", factors[k].site));
    if (k > 0 && factors[k].site == factors[k - 1].site)
      throw ValidationError(fmt::format("site {} appears twice in one Pauli string", factors[k].site));
  }
  return PauliString(std::move(factors));
}

PauliString PauliString::single(std::size_t site, Pauli axis) {
  return from_factors({{site, axis}});
}

PauliString PauliString::pair(std::size_t a, Pauli pa, std::size_t b, Pauli pb) {
  return from_factors({{a, pa}, {b, pb}});
}

Pauli PauliString::at(std::size_t site) const noexcept {
  for (const auto& f : factors_)
    if (f.site == site) return f.axis;
  return Pauli::I;
}

std::string PauliString::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += fmt::format("{}@{}", pauli_char(f.axis), f.site);
  }
  return out;
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  cplx phase = 1.0;
  std::vector<PauliFactor> out;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->site < ib->site)) {
      out.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->site < ia->site) {
      out.push_back(*ib++);
    } else {
      auto [ph, p] = multiply(ia->axis, ib->axis);
      phase *= ph;
      if (p != Pauli::I) out.push_back({ia->site, p});
      ++ia;
      ++ib;
    }
  }
  return {phase, PauliString(std::move(out))};
}

namespace {

PauliString canonical_or_throw(std::vector<PauliFactor> factors) {
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].axis == Pauli::I)
      throw ValidationError(fmt::format("identity factor on site {}", factors[k].site));
    if (k > 0 && factors[k].site <= factors[k - 1].site)
      throw ValidationError("Pauli factors must have strictly increasing sites");
  }
  return PauliString::from_factors(std::move(factors));
}

}  // namespace

PauliTerm::PauliTerm(double coefficient, std::vector<PauliFactor> factors)
    : PauliTerm(coefficient, canonical_or_throw(std::move(factors))) {}

PauliTerm::PauliTerm(double coefficient, PauliString string)
    : coefficient_(coefficient), string_(std::move(string)) {
  if (!std::isfinite(coefficient)) throw ValidationError("non-finite Pauli coefficient");
}

SpinHamiltonian::SpinHamiltonian(std::size_t num_spins) : num_spins_(num_spins) {
  if (num_spins == 0) throw ValidationError("spin Hamiltonian needs at least one spin");
}

SpinHamiltonian::SpinHamiltonian(std::size_t num_spins, std::vector<PauliTerm> terms)
    : SpinHamiltonian(num_spins) {
  for (auto& t : terms) add(std::move(t));
}

void SpinHamiltonian::add(PauliTerm term) {
  if (!term.string().is_identity() && term.string().max_site() >= num_spins_)
    throw ValidationError(fmt::format("site {} out of range for {} spins",
                                      term.string().max_site(), num_spins_));
  terms_.push_back(std::move(term));
}

void SpinHamiltonian::add(double coefficient, std::vector<PauliFactor> factors) {
  add(PauliTerm(coefficient, PauliString::from_factors(std::move(factors))));
}

SpinHamiltonian SpinHamiltonian::canonicalized() const {
  std::map<PauliString, double> merged;
  for (const auto& t : terms_) merged[t.string()] += t.coefficient();
  SpinHamiltonian out(num_spins_);
  for (const auto& [s, c] : merged)
    if (c != 0.0) out.terms_.emplace_back(c, s);
  return out;
}

SpinHamiltonian SpinHamiltonian::scaled(double factor) const {
  SpinHamiltonian out(num_spins_);
  for (const auto& t : terms_) out.terms_.emplace_back(t.coefficient() * factor, t.string());
  return out;
}

SpinHamiltonian SpinHamiltonian::with_num_spins(std::size_t num_spins) const {
  return SpinHamiltonian(num_spins, terms_);
}

double SpinHamiltonian::max_abs_coefficient() const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient()));
  return m;
}

SpinHamiltonian operator+(const SpinHamiltonian& a, const SpinHamiltonian& b) {
  SpinHamiltonian out(std::max(a.num_spins_, b.num_spins_));
  for (const auto& t : a.terms_) out.terms_.push_back(t);
  for (const auto& t : b.terms_) out.terms_.push_back(t);
  return out;
}

PauliSum PauliSum::from(const SpinHamiltonian& h) {
  PauliSum s;
  for (const auto& t : h.terms()) s.add(t.coefficient(), t.string());
  return s;
}

void PauliSum::add(cplx coefficient, const PauliString& string) {
  auto [it, inserted] = terms_.emplace(string, coefficient);
  if (!inserted) it->second += coefficient;
}

cplx PauliSum::coefficient(const PauliString& string) const {
  auto it = terms_.find(string);
  return it == terms_.end() ? cplx(0) : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& [s, c] : other.terms_) add(c, s);
  return *this;
}

PauliSum PauliSum::scaled(cplx factor) const {
  PauliSum out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, c * factor);
  return out;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      auto [phase, s] = multiply(sa, sb);
      out.add(ca * cb * phase, s);
    }
  return out;
}

SpinHamiltonian PauliSum::to_spin_hamiltonian(std::size_t num_spins, double tol) const {
  SpinHamiltonian out(num_spins);
  for (const auto& [s, c] : terms_) {
    if (std::abs(c) <= tol) continue;
    if (std::abs(c.imag()) > tol * std::max(1.0, std::abs(c)))
      throw ValidationError(fmt::format("Pauli sum is not Hermitian: coefficient of {} is {}{:+}i",
                                        s.to_string(), c.real(), c.imag()));
    out.add(PauliTerm(c.real(), s));
  }
  return out;
}

}  // namespace hred::ops
