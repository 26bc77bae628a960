#pragma once

// Line-oriented interchange formats.
//
//   spins N                 modes M
//   1.0 Z@0 Z@1             0.5 +0 -1
//   -0.25                   # comment
//
// A bare coefficient is an identity term.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hred/ops/fermion.hpp"
#include "hred/ops/pauli.hpp"

namespace hred::ops {

struct TextLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

// Splits on whitespace; drops blank lines and lines starting with '#'.
std::vector<TextLine> tokenize(std::string_view text);

double parse_real(const std::string& token, std::size_t line);
std::size_t parse_index(const std::string& token, std::size_t line);
// Round-trip exact representation.
std::string format_real(double v);

SpinHamiltonian parse_spin_hamiltonian(std::string_view text);
// Term lines only, without the header.
SpinHamiltonian parse_spin_terms(std::size_t num_spins, const std::vector<TextLine>& lines);
std::string format_spin_hamiltonian(const SpinHamiltonian& h);
std::string format_spin_terms(const SpinHamiltonian& h);

FermionOperator parse_fermion_operator(std::string_view text);
// Fails if any coefficient has a nonzero imaginary part.
std::string format_fermion_operator(const FermionOperator& op);

}  // namespace hred::ops
