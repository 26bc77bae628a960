#pragma once

// Pauli-string algebra and spin Hamiltonians.
//
// Basis convention: site 0 is the most significant tensor factor, so the
// computational basis index of |s_0 s_1 ... s_{n-1}> is sum_k s_k 2^{n-1-k}.
// Z|0> = |0>, Z|1> = -|1>.

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace hred::ops {

using cplx = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
Eigen::Matrix2cd pauli_matrix(Pauli p);

// a * b = phase * c for single-site Paulis.
std::pair<cplx, Pauli> multiply(Pauli a, Pauli b);

struct PauliFactor {
  std::size_t site = 0;
  Pauli axis = Pauli::I;

  friend auto operator<=>(const PauliFactor&, const PauliFactor&) = default;
};

// Product of single-site Paulis in canonical form: sites strictly increasing,
// no identity factors. The empty string is the identity.
class PauliString {
 public:
  PauliString() = default;

  // Accepts factors in any order; rejects repeated sites and identity axes.
  static PauliString from_factors(std::vector<PauliFactor> factors);
  static PauliString single(std::size_t site, Pauli axis);
  static PauliString pair(std::size_t a, Pauli pa, std::size_t b, Pauli pb);

  std::span<const PauliFactor> factors() const noexcept { return factors_; }
  std::size_t weight() const noexcept { return factors_.size(); }
  bool is_identity() const noexcept { return factors_.empty(); }
  Pauli at(std::size_t site) const noexcept;
  std::size_t max_site() const noexcept { return factors_.empty() ? 0 : factors_.back().site; }
  std::string to_string() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  explicit PauliString(std::vector<PauliFactor> canonical) : factors_(std::move(canonical)) {}
  friend std::pair<cplx, PauliString> multiply(const PauliString&, const PauliString&);

  std::vector<PauliFactor> factors_;
};

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

class PauliTerm {
 public:
  // `factors` must already be canonical (strictly increasing sites, no I);
  // anything else is a ValidationError.
  PauliTerm(double coefficient, std::vector<PauliFactor> factors);
  PauliTerm(double coefficient, PauliString string);

  static PauliTerm identity(double coefficient) { return PauliTerm(coefficient, PauliString{}); }

  double coefficient() const noexcept { return coefficient_; }
  const PauliString& string() const noexcept { return string_; }
  std::span<const PauliFactor> factors() const noexcept { return string_.factors(); }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  double coefficient_;
  PauliString string_;
};

class SpinHamiltonian {
 public:
  explicit SpinHamiltonian(std::size_t num_spins);
  SpinHamiltonian(std::size_t num_spins, std::vector<PauliTerm> terms);

  std::size_t num_spins() const noexcept { return num_spins_; }
  std::span<const PauliTerm> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add(PauliTerm term);
  void add(double coefficient, std::vector<PauliFactor> factors);

  // Duplicate strings merged, exact zeros dropped, terms sorted by string.
  SpinHamiltonian canonicalized() const;
  SpinHamiltonian scaled(double factor) const;
  SpinHamiltonian with_num_spins(std::size_t num_spins) const;

  double max_abs_coefficient() const;

  friend SpinHamiltonian operator+(const SpinHamiltonian& a, const SpinHamiltonian& b);
  friend bool operator==(const SpinHamiltonian&, const SpinHamiltonian&) = default;

 private:
  std::size_t num_spins_;
  std::vector<PauliTerm> terms_;
};

// Complex-weighted Pauli sums for symbolic products (gadget bookkeeping).
class PauliSum {
 public:
  PauliSum() = default;
  static PauliSum from(const SpinHamiltonian& h);

  void add(cplx coefficient, const PauliString& string);
  cplx coefficient(const PauliString& string) const;
  const std::map<PauliString, cplx>& terms() const noexcept { return terms_; }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum scaled(cplx factor) const;
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  // Drops |c| <= tol; fails if any imaginary part exceeds tol * max(1, |c|).
  SpinHamiltonian to_spin_hamiltonian(std::size_t num_spins, double tol = 1e-9) const;

 private:
  std::map<PauliString, cplx> terms_;
};

}  // namespace hred::ops
