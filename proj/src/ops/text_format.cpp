#include "hred/ops/text_format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::ops {

std::vector<TextLine> tokenize(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream ss{std::string(text.substr(pos, end - pos))};
    TextLine line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty() && line.tokens.front()[0] != '#') out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

double parse_real(const std::string& token, std::size_t line) {
  double v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError(line, token, "expected a real number");
  if (!std::isfinite(v)) throw ParseError(line, token, "number is not finite");
  return v;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, token, "expected a non-negative integer");
  return v;
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

namespace {

std::size_t expect_header(const std::vector<TextLine>& lines, const char* keyword) {
  if (lines.empty()) throw ParseError(1, "", fmt::format("missing '{} N' header", keyword));
  const auto& h = lines.front();
  if (h.tokens[0] != keyword) throw ParseError(h.number, h.tokens[0], fmt::format("expected '{}'", keyword));
  if (h.tokens.size() != 2) throw ParseError(h.number, h.tokens.back(), "header takes exactly one value");
  const auto n = parse_index(h.tokens[1], h.number);
  if (n == 0) throw ParseError(h.number, h.tokens[1], "count must be positive");
  return n;
}

}  // namespace

SpinHamiltonian parse_spin_terms(std::size_t num_spins, const std::vector<TextLine>& lines) {
  SpinHamiltonian h(num_spins);
  for (const auto& line : lines) {
    const double c = parse_real(line.tokens[0], line.number);
    std::vector<PauliFactor> factors;
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
      const auto& tok = line.tokens[k];
      const auto at = tok.find('@');
      if (at != 1) throw ParseError(line.number, tok, "expected axis@site");
      Pauli axis;
      try {
        axis = pauli_from_char(tok[0]);
      } catch (const ValidationError&) {
        throw ParseError(line.number, tok, "axis must be X, Y or Z");
      }
      if (axis == Pauli::I) throw ParseError(line.number, tok, "axis must be X, Y or Z");
      const auto site = parse_index(tok.substr(2), line.number);
      if (site >= num_spins) throw ParseError(line.number, tok, "site out of range");
      factors.push_back({site, axis});
    }
    try {
      h.add(c, std::move(factors));
    } catch (const ValidationError& e) {
      throw ParseError(line.number, line.tokens.back(), e.what());
    }
  }
  return h;
}

SpinHamiltonian parse_spin_hamiltonian(std::string_view text) {
  const auto lines = tokenize(text);
  const auto n = expect_header(lines, "spins");
  return parse_spin_terms(n, std::vector<TextLine>(lines.begin() + 1, lines.end()));
}

std::string format_spin_terms(const SpinHamiltonian& h) {
  std::string out;
  for (const auto& t : h.terms()) {
    out += format_real(t.coefficient());
    for (const auto& f : t.factors()) out += fmt::format(" {}@{}", pauli_char(f.axis), f.site);
    out += '\n';
  }
  return out;
}

std::string format_spin_hamiltonian(const SpinHamiltonian& h) {
  return fmt::format("spins {}\n", h.num_spins()) + format_spin_terms(h);
}

FermionOperator parse_fermion_operator(std::string_view text) {
  const auto lines = tokenize(text);
  const auto m = expect_header(lines, "modes");
  FermionOperator op(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const double c = parse_real(line.tokens[0], line.number);
    Monomial mono;
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
      const auto& tok = line.tokens[k];
      if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
        throw ParseError(line.number, tok, "expected +mode or -mode");
      const auto mode = parse_index(tok.substr(1), line.number);
      if (mode >= m) throw ParseError(line.number, tok, "mode out of range");
      mono.push_back({mode, tok[0] == '+'});
    }
    op.add(c, mono);
  }
  return op;
}

std::string format_fermion_operator(const FermionOperator& op) {
  std::string out = fmt::format("modes {}\n", op.num_modes());
  for (const auto& [m, c] : op.terms()) {
    if (c.imag() != 0.0)
      throw ValidationError("complex coefficients are not representable in the interchange format");
    out += format_real(c.real());
    for (const auto& l : m) out += fmt::format(" {}{}", l.creation ? '+' : '-', l.mode);
    out += '\n';
  }
  return out;
}

}  // namespace hred::ops
