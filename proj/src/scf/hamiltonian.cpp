#include "hred/scf/hamiltonian.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/text_format.hpp"

namespace hred::scf {

SecondQuantizedHamiltonian SecondQuantizedHamiltonian::zero(std::size_t modes) {
  if (modes == 0 || modes > 62) throw ValidationError("mode count must be between 1 and 62");
  SecondQuantizedHamiltonian h;
  h.modes = modes;
  h.one_body = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(modes), static_cast<Eigen::Index>(modes));
  return h;
}

void SecondQuantizedHamiltonian::add_one_body(std::size_t i, std::size_t j, double value) {
  if (i >= modes || j >= modes) throw ValidationError(fmt::format("one-body index ({}, {}) out of range", i, j));
  one_body(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += value;
}

void SecondQuantizedHamiltonian::add_two_body(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                                              double value) {
  if (i >= modes || j >= modes || k >= modes || l >= modes)
    throw ValidationError(fmt::format("two-body index ({}, {}, {}, {}) out of range", i, j, k, l));
  if (value == 0) return;
  two_body[{i, j, k, l}] += value;
}

ops::FermionOperator SecondQuantizedHamiltonian::to_operator() const {
  ops::FermionOperator op = ops::FermionOperator::scalar(modes, constant);
  for (std::size_t i = 0; i < modes; ++i)
    for (std::size_t j = 0; j < modes; ++j) {
      const double v = one_body(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (v != 0) op.add(v, {{i, true}, {j, false}});
    }
  for (const auto& [idx, v] : two_body)
    op.add(0.5 * v, {{idx[0], true}, {idx[1], true}, {idx[2], false}, {idx[3], false}});
  return op.pruned();
}

void SecondQuantizedHamiltonian::validate() const {
  const auto m = static_cast<Eigen::Index>(modes);
  if (modes == 0) throw ValidationError("mode count must be positive");
  if (one_body.rows() != m || one_body.cols() != m)
    throw ValidationError(fmt::format("one-body matrix must be {}x{}", m, m));
  if (!one_body.allFinite() || !std::isfinite(constant)) throw ValidationError("coefficients must be finite");
  for (const auto& [idx, v] : two_body) {
    for (auto k : idx)
      if (k >= modes) throw ValidationError("two-body index out of range");
    if (!std::isfinite(v)) throw ValidationError("coefficients must be finite");
  }
  const auto op = to_operator();
  const double scale = std::max(1.0, op.max_abs_coefficient());
  const auto defect = (op - op.adjoint()).pruned(1e-12 * scale);
  if (!defect.empty()) throw ValidationError("Hamiltonian is not Hermitian");
}

std::string format_second_quantized(const SecondQuantizedHamiltonian& h) {
  std::string out = fmt::format("modes {}\n", h.modes);
  if (h.constant != 0) out += fmt::format("constant {}\n", ops::format_real(h.constant));
  for (Eigen::Index i = 0; i < h.one_body.rows(); ++i)
    for (Eigen::Index j = 0; j < h.one_body.cols(); ++j)
      if (h.one_body(i, j) != 0) out += fmt::format("1 {} {} {}\n", i, j, ops::format_real(h.one_body(i, j)));
  for (const auto& [idx, v] : h.two_body)
    out += fmt::format("2 {} {} {} {} {}\n", idx[0], idx[1], idx[2], idx[3], ops::format_real(v));
  return out;
}

SecondQuantizedHamiltonian parse_second_quantized(std::string_view text) {
  const auto lines = ops::tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "modes" || lines[0].tokens.size() != 2)
    throw ParseError(lines.empty() ? 1 : lines[0].number, lines.empty() ? "" : lines[0].tokens[0],
                     "expected 'modes M' header");
  const auto m = ops::parse_index(lines[0].tokens[1], lines[0].number);
  if (m == 0 || m > 62) throw ParseError(lines[0].number, lines[0].tokens[1], "mode count must be 1..62");
  auto h = SecondQuantizedHamiltonian::zero(m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    auto index = [&](std::size_t pos) {
      const auto i = ops::parse_index(l.tokens[pos], l.number);
      if (i >= m) throw ParseError(l.number, l.tokens[pos], fmt::format("mode index must be below {}", m));
      return i;
    };
    if (l.tokens[0] == "constant") {
      if (l.tokens.size() != 2) throw ParseError(l.number, l.tokens.back(), "expected 'constant value'");
      h.constant += ops::parse_real(l.tokens[1], l.number);
    } else if (l.tokens[0] == "1") {
      if (l.tokens.size() != 4) throw ParseError(l.number, l.tokens.back(), "one-body lines are '1 i j value'");
      h.add_one_body(index(1), index(2), ops::parse_real(l.tokens[3], l.number));
    } else if (l.tokens[0] == "2") {
      if (l.tokens.size() != 6) throw ParseError(l.number, l.tokens.back(), "two-body lines are '2 i j k l value'");
      h.add_two_body(index(1), index(2), index(3), index(4), ops::parse_real(l.tokens[5], l.number));
    } else {
      throw ParseError(l.number, l.tokens[0], "expected 'constant', '1' or '2'");
    }
  }
  h.validate();
  return h;
}

}  // namespace hred::scf
