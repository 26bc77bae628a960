#pragma once

// Compiles a 2-local Pauli Hamiltonian (|coefficients| <= 1) into a Heisenberg
// Hamiltonian with single-spin fields through the gadget chain
//
//   decomposition (A = B only):  J A_i A_j   <- +lam_d (A_i s_w + A_j s'_w)
//   coupling:                    J A_i B_j   <- -lam_1 (A_i A_m + B_j B_m)
//   pair:                        c A_m A_n   <- -lam_2 (A_m A_x + B_m B_x + A_n A_x + B_n B_x)
//   heisenberg:     c (A_a A_b + B_a B_b)    <- +lam_3 (S_a.S_y + S_b.S_y)
//
// where B is the cyclic successor of A (X->Y->Z->X) and s, s' are the two Paulis
// other than A. First-order and second-order one-local terms of every gadget
// are cancelled by explicit compensating fields; constants go to `offset`, so
//   eig(compiled)[0 .. 2^n) - offset  ~  eig(source).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hred/gadget/mediator.hpp"
#include "hred/gadget/schedule.hpp"
#include "hred/ops/pauli.hpp"

namespace hred::gadget {

struct GadgetRecord {
  std::size_t layer = 0;  // index into GadgetPlan::layers
  LayerKind kind = LayerKind::Coupling;
  std::size_t mediator = 0;
  double theta = 0;
  double phi = 0;
  double lambda = 0;
  double delta = 0;
  Pauli frozen = Pauli::I;  // unwanted Pauli for pair / heisenberg gadgets
  std::vector<ops::PauliTerm> target;  // effective couplings produced
  std::vector<MediatorCoupling> couplings;

  friend bool operator==(const GadgetRecord&, const GadgetRecord&) = default;
};

struct LayerRecord {
  LayerKind kind = LayerKind::Coupling;
  double kappa = 1;
  LayerScale scale;
  std::size_t gadget_count = 0;

  friend bool operator==(const LayerRecord&, const LayerRecord&) = default;
};

enum class VerificationStatus { NotRun, Passed, Failed, Skipped };
const char* verification_status_name(VerificationStatus s);
VerificationStatus verification_status_from_name(const std::string& s);

struct PlanVerification {
  VerificationStatus status = VerificationStatus::NotRun;
  double measured = 0;          // max |eig(compiled) - offset - eig(source)| over the low 2^n levels
  double tolerance_factor = 10;  // pass iff measured <= tolerance_factor * total_error_budget
  std::string note;

  friend bool operator==(const PlanVerification&, const PlanVerification&) = default;
};

struct GadgetPlan {
  ops::SpinHamiltonian source{1};
  double target_precision = kNoPrecision;
  std::size_t depth = 3;
  std::vector<LayerRecord> layers;
  std::vector<GadgetRecord> gadgets;
  ops::SpinHamiltonian compiled{1};
  double offset = 0;
  double total_error_budget = 0;
  PlanVerification verification;

  std::size_t num_mediators() const { return compiled.num_spins() - source.num_spins(); }

  friend bool operator==(const GadgetPlan&, const GadgetPlan&) = default;
};

struct CompileOptions {
  // Number of standard layers applied (1 = coupling only, 3 = full chain).
  std::size_t depth = 3;
  ScheduleOptions schedule;
  bool verify = true;
  std::size_t verify_max_spins = 13;
  double tolerance_factor = 10;
};

GadgetPlan compile(const ops::SpinHamiltonian& source, double precision, const CompileOptions& opt = {});

// Round-off allowance of the spectral comparison: 64 eps (sum |c| of compiled and source).
double verification_floor(const GadgetPlan& plan);

// Runs exact diagonalization of compiled vs source; skipped above max_spins.
// Passes iff measured <= tolerance_factor * total_error_budget + verification_floor.
PlanVerification verify_plan(const GadgetPlan& plan, double tolerance_factor = 10, std::size_t max_spins = 13);

// Number of pairs (a, b) carrying an equal-coefficient X X + Y Y + Z Z triple.
std::size_t count_heisenberg_couplings(const ops::SpinHamiltonian& h);
// True iff every multi-site term belongs to such a triple.
bool is_heisenberg_form(const ops::SpinHamiltonian& h);

// Pauli chosen as unwanted partner of A in the pair layer: X->Y, Y->Z, Z->X.
Pauli cyclic_next(Pauli a);
Pauli third_pauli(Pauli a, Pauli b);

}  // namespace hred::gadget
