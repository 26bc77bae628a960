#pragma once

// Single-mediator gadgets: a strongly split auxiliary spin whose virtual
// excitations generate 2-local couplings at second order.
//
// The mediator sits in Delta |h><h| with |l> = M|0>, |h> = M|1>,
// M(theta, phi) = [[cos t, -sin t e^{-i phi}], [sin t e^{i phi}, cos t]].

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "hred/ops/pauli.hpp"

namespace hred::gadget {

using ops::cplx;
using ops::Pauli;

Eigen::Matrix2cd rotation(double theta, double phi);

struct SplittingBasis {
  Eigen::Vector2cd low;
  Eigen::Vector2cd high;
};
SplittingBasis splitting_basis(double theta, double phi);

// <l| P |h> for a single-spin Pauli
cplx offdiag_element(Pauli p, double theta, double phi);
// <l| P |l>
double low_expectation(Pauli p, double theta, double phi);
// Bloch vector of |h>: Delta |h><h| = Delta/2 (I + r.sigma)
std::array<double, 3> high_bloch_vector(double theta, double phi);

// c * (system Pauli on `site`) (x) (mediator Pauli)
struct MediatorCoupling {
  double coefficient = 0;
  std::size_t site = 0;
  Pauli system_axis = Pauli::I;
  Pauli mediator_axis = Pauli::I;

  friend bool operator==(const MediatorCoupling&, const MediatorCoupling&) = default;
};

// Second-order low-sector expansion of Delta|h><h| + sum(couplings), acting on
// the system spins (the mediator's low level is the zero of energy).
struct GadgetExpansion {
  ops::PauliSum first_order;
  ops::PauliSum second_order;
};

GadgetExpansion expand_gadget(const std::vector<MediatorCoupling>& couplings, double theta, double phi,
                              double delta);

struct MediatorGadget {
  std::vector<std::size_t> system_sites;  // i, j, k
  std::size_t mediator = 0;
  double theta = 0;
  double phi = 0;
  double lambda = 0;
  double delta = 0;

  // theta in [0, pi/2], phi in [0, 2 pi), lambda, delta > 0, lambda <= delta/10
  void validate() const;
};

struct EffectiveCoefficients {
  double ab = 0;  // A_i B_j
  double ac = 0;  // A_i C_k
  double bc = 0;  // B_j C_k
  ops::SpinHamiltonian h_loc;  // one-local and constant terms, first and second order
};

// Closed form for V = lambda (A_i X + B_j Y + C_k Z) on the mediator:
// (lambda^2/Delta) (sin^2 2t sin 2phi, cos phi sin 4t, sin 4t sin phi).
EffectiveCoefficients mediator_effective(const MediatorGadget& g, std::array<Pauli, 3> paulis,
                                         std::size_t num_spins);

// Rotation parameters making a gadget with mediator axes {p, q} produce the
// pair coefficient ratio r (lambda^2/Delta = 1). Throws for |r| > 1 and p == q.
struct Angles {
  double theta = 0;
  double phi = 0;
};
Angles coupling_angles(Pauli p, Pauli q, double ratio);

// Splitting basis frozen in the +1/-1 eigenbasis of `axis` (low = +1).
Angles frozen_angles(Pauli axis);

}  // namespace hred::gadget
