#pragma once

// Fermi-Hubbard models and their half-filling exchange limit.
//
// Mode of (site i, spin s) is 2i + s with s = 0 for up. The spin-model side
// uses Pauli operators, S_i = (X_i, Y_i, Z_i), and Z = +1 for up, so the
// singly-occupied state with spin bits x_0 ... x_{n-1} (site 0 most significant)
// is a^dag_{0,x_0} a^dag_{1,x_1} ... |0>.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hred/gadget/compiler.hpp"
#include "hred/ops/fermion.hpp"
#include "hred/ops/pauli.hpp"

namespace hred::lattice {

struct HubbardEdge {
  std::size_t i = 0, j = 0;
  std::optional<double> t;  // overrides the model's uniform t

  friend bool operator==(const HubbardEdge&, const HubbardEdge&) = default;
};

struct HubbardModel {
  std::size_t sites = 2;
  std::vector<HubbardEdge> edges;
  double t = 1;
  double U = 1;
  std::vector<std::array<double, 3>> fields;  // empty or one (bx, by, bz) per site

  std::size_t num_modes() const { return 2 * sites; }
  double hopping(const HubbardEdge& e) const { return e.t.value_or(t); }
  std::size_t max_degree() const;
  double max_hopping() const;
  // Throws ValidationError.
  void validate() const;

  friend bool operator==(const HubbardModel&, const HubbardModel&) = default;
};

inline std::size_t mode_of(std::size_t site, int spin) { return 2 * site + static_cast<std::size_t>(spin); }

// t sum_{<ij>,s} (a^dag_is a_js + h.c.) + U sum_i n_i,up n_i,down + sum_i b_i . S_i
ops::FermionOperator build_hubbard(const HubbardModel& m);
ops::FermionOperator hubbard_hopping(const HubbardModel& m);
ops::FermionOperator hubbard_interaction(const HubbardModel& m);
ops::FermionOperator hubbard_fields(const HubbardModel& m);

struct HalfFillingSector {
  ops::FockSector sector;
  // singly_occupied[x] = sector index of the state with spin configuration x
  std::vector<std::size_t> singly_occupied;
};

HalfFillingSector half_filling(std::size_t sites);
std::uint64_t singly_occupied_state(std::size_t sites, std::uint64_t spin_config);

struct ExchangeModel {
  ops::SpinHamiltonian hamiltonian{1};
  double error_budget = 0;  // sum over edges of t^3/U^2 (+ t^2 |b|/U^2 with fields)
};

// Per edge (t^2/U)(S_i.S_j - 1), plus the fields. Requires U >= 10 t deg_max.
ExchangeModel heisenberg_from_hubbard(const HubbardModel& m);

struct EffectiveHamiltonianReport {
  Eigen::MatrixXcd h_eff;   // singly-occupied basis, spin configuration order
  Eigen::MatrixXcd model;   // realized heisenberg_from_hubbard output
  double v0_norm = 0;       // max |entry| of the hopping projected on the low sector
  double max_deviation = 0;
  double error_budget = 0;
  double tolerance = 0;
  bool passed = false;
  std::vector<std::string> warnings;
};

// Second-order reduction with H = U term + fields, V = hopping, low sector =
// singly occupied states. Does not throw on mismatch.
EffectiveHamiltonianReport exchange_report(const HubbardModel& m, double tolerance);
// As above; throws VerificationError if V0 != 0 or max_deviation > tolerance.
EffectiveHamiltonianReport verify_exchange(const HubbardModel& m, double tolerance);

// Lowering of the top (Heisenberg) layer of a compiled plan: one edge per
// Heisenberg coupling with t = 10 Delta_top and U = t^2 / c, c the coupling.
struct HubbardLowering {
  HubbardModel model;
  std::vector<std::size_t> sites;  // plan spin of each Hubbard site
  ops::SpinHamiltonian remainder{1};  // compiled terms not carried by the Hubbard edges
  double constant = 0;               // constant shift introduced by (S.S - 1)
};

HubbardLowering lower_heisenberg_layer(const gadget::GadgetPlan& plan);

}  // namespace hred::lattice
