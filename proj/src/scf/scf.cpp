#include "hred/scf/scf.hpp"

#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/realize.hpp"
#include "hred/ops/spectrum.hpp"

namespace hred::scf {

SlaterState aufbau(const Eigen::MatrixXcd& f, std::size_t particles) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(f);
  if (es.info() != Eigen::Success) throw Error("mean-field diagonalization failed");
  return {es.eigenvectors().leftCols(static_cast<Eigen::Index>(particles))};
}

ScfRun scf_iterate(const SecondQuantizedHamiltonian& h, const SlaterState& initial, const ScfOptions& opt) {
  if (opt.damping < 0 || opt.damping >= 1) throw ValidationError("damping must be in [0, 1)");
  if (!(opt.tolerance > 0)) throw ValidationError("tolerance must be positive");
  const std::size_t n = initial.particles();
  Eigen::MatrixXcd d_in = density_matrix(initial);

  ScfRun run{initial, 0, false, 0, 0, {}};
  for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
    run.state = aufbau(fock_matrix(h, d_in, opt.xc), n);
    const Eigen::MatrixXcd d = density_matrix(run.state);
    const Eigen::MatrixXcd d_next = density_matrix(aufbau(fock_matrix(h, d, opt.xc), n));
    run.iterations = it;
    run.residual = (d_next - d).cwiseAbs().maxCoeff();
    run.residuals.push_back(run.residual);
    if (run.residual <= opt.tolerance) {
      run.converged = true;
      break;
    }
    d_in = (1 - opt.damping) * d + opt.damping * d_in;
  }
  run.energy = energy(h, run.state, opt.xc);
  return run;
}

SlaterState random_slater(std::size_t modes, std::size_t particles, std::uint64_t seed) {
  if (particles == 0 || particles > modes) throw ValidationError("need 1 <= N <= M");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(modes), static_cast<Eigen::Index>(particles));
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return {qr.householderQ() * Eigen::MatrixXcd::Identity(a.rows(), a.cols())};
}

ScfResult scf_solve(const SecondQuantizedHamiltonian& h, std::size_t particles, const SlaterState& initial,
                    const ScfOptions& opt) {
  h.validate();
  initial.validate();
  if (initial.modes() != h.modes || initial.particles() != particles)
    throw ValidationError(fmt::format("initial state is {}x{}, expected {}x{}", initial.modes(),
                                      initial.particles(), h.modes, particles));
  ScfResult res;
  res.runs.push_back(scf_iterate(h, initial, opt));
  for (std::size_t r = 1; r <= opt.restarts; ++r)
    res.runs.push_back(scf_iterate(h, random_slater(h.modes, particles, opt.seed * 1000003u + r), opt));

  std::size_t best = 0;
  for (std::size_t r = 1; r < res.runs.size(); ++r)
    if (res.runs[r].energy < res.runs[best].energy) best = r;
  const auto& b = res.runs[best];
  res.state = b.state;
  res.energy = b.energy;
  res.converged = b.converged;
  res.iterations = b.iterations;
  res.residual = b.residual;
  res.best_run = best;
  return res;
}

ScfResult scf_solve(const SecondQuantizedHamiltonian& h, std::size_t particles, const ScfOptions& opt) {
  return scf_solve(h, particles, random_slater(h.modes, particles, opt.seed * 1000003u), opt);
}

double exact_ground_energy(const SecondQuantizedHamiltonian& h, std::size_t particles) {
  h.validate();
  const ops::FockSector sector(h.modes, particles);
  if (sector.dimension() > ops::dense_dimension_limit())
    throw ResourceError(fmt::format("sector dimension {} exceeds the dense limit {}", sector.dimension(),
                                    ops::dense_dimension_limit()));
  const auto m = ops::realize_fermion(h.to_operator(), sector);
  return ops::lowest_eigenvalues(m, 1)(0);
}

}  // namespace hred::scf
