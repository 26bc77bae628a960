#pragma once

// Self-consistent field iteration over single determinants: build the mean-field
// matrix from the current density, fill its N lowest orbitals, mix densities.
// A run converges when the filled determinant reproduces itself, i.e.
// ||D - aufbau(F(D))||_max <= tolerance.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hred/scf/hamiltonian.hpp"
#include "hred/scf/slater.hpp"

namespace hred::scf {

struct ScfOptions {
  double damping = 0.5;  // weight of the previous density in the next input
  double tolerance = 1e-8;
  std::size_t max_iterations = 500;
  std::size_t restarts = 16;  // random starts in addition to the given initial state
  std::uint64_t seed = 0;
  std::optional<XCPotential> xc;
};

struct ScfRun {
  SlaterState state;
  double energy = 0;
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0;
  std::vector<double> residuals;  // one per iteration
};

struct ScfResult {
  SlaterState state;
  double energy = 0;
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0;
  std::size_t best_run = 0;  // 0 = the supplied initial state, r = random restart r
  std::vector<ScfRun> runs;
};

// Lowest-N eigenvectors of a Hermitian matrix.
SlaterState aufbau(const Eigen::MatrixXcd& f, std::size_t particles);

ScfRun scf_iterate(const SecondQuantizedHamiltonian& h, const SlaterState& initial, const ScfOptions& opt);

// Runs the initial state and opt.restarts seeded random starts. Picks the
// lowest energy, ties broken by the lower run index. Never throws on
// non-convergence.
ScfResult scf_solve(const SecondQuantizedHamiltonian& h, std::size_t particles, const SlaterState& initial,
                    const ScfOptions& opt = {});
ScfResult scf_solve(const SecondQuantizedHamiltonian& h, std::size_t particles, const ScfOptions& opt = {});

// Random orthonormal M x N orbitals (QR of a Gaussian matrix).
SlaterState random_slater(std::size_t modes, std::size_t particles, std::uint64_t seed);

// Exact ground energy on the N-particle sector (dense, limited by the dense dimension).
double exact_ground_energy(const SecondQuantizedHamiltonian& h, std::size_t particles);

}  // namespace hred::scf
