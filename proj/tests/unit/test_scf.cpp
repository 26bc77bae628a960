#include <doctest.h>

#include <cmath>
#include <random>

#include "hred/errors.hpp"
#include "hred/ops/fermion.hpp"
#include "hred/scf/hamiltonian.hpp"
#include "hred/scf/ising.hpp"
#include "hred/scf/scf.hpp"
#include "hred/scf/slater.hpp"
#include "oracles.hpp"

using namespace hred;
using namespace hred::scf;

namespace {

SecondQuantizedHamiltonian random_hamiltonian(std::size_t M, std::mt19937_64& rng, double two_scale = 1.0) {
  std::normal_distribution<double> g;
  auto h = SecondQuantizedHamiltonian::zero(M);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = i; j < M; ++j) {
      const double v = g(rng);
      h.add_one_body(i, j, v);
      if (i != j) h.add_one_body(j, i, v);
    }
  // a^dag_i a^dag_j a_k a_l and its adjoint a^dag_l a^dag_k a_j a_i
  std::uniform_int_distribution<std::size_t> m(0, M - 1);
  for (int n = 0; n < 12; ++n) {
    const std::size_t i = m(rng), j = m(rng), k = m(rng), l = m(rng);
    const double v = two_scale * g(rng);
    h.add_two_body(i, j, k, l, v);
    h.add_two_body(l, k, j, i, v);
  }
  h.constant = g(rng);
  return h;
}

// Full-Fock-space realization from explicit annihilators.
oracle::MatrixXcd full_oracle(const SecondQuantizedHamiltonian& h) {
  const std::size_t M = h.modes;
  std::vector<oracle::MatrixXcd> a;
  for (std::size_t k = 0; k < M; ++k) a.push_back(oracle::annihilator(k, M));
  const auto dim = a[0].rows();
  oracle::MatrixXcd out = h.constant * oracle::MatrixXcd::Identity(dim, dim);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j)
      if (h.one_body(i, j) != 0) out += h.one_body(i, j) * a[i].adjoint() * a[j];
  for (const auto& [idx, v] : h.two_body)
    out += 0.5 * v * a[idx[0]].adjoint() * a[idx[1]].adjoint() * a[idx[2]] * a[idx[3]];
  return out;
}

// b^dag_1 ... b^dag_N |0> on the full Fock space (b^dag_N applied first).
Eigen::VectorXcd determinant_oracle(const SlaterState& s) {
  const std::size_t M = s.modes();
  std::vector<oracle::MatrixXcd> a;
  for (std::size_t k = 0; k < M; ++k) a.push_back(oracle::annihilator(k, M));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(a[0].rows());
  psi(0) = 1;
  for (Eigen::Index k = s.u.cols(); k-- > 0;) {
    oracle::MatrixXcd b = oracle::MatrixXcd::Zero(psi.size(), psi.size());
    for (std::size_t i = 0; i < M; ++i) b += s.u(static_cast<Eigen::Index>(i), k) * a[i].adjoint();
    psi = (b * psi).eval();
  }
  return psi;
}

}  // namespace

TEST_CASE("determinant amplitudes and energies match the Fock-space oracle") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 6; ++rep) {
    const std::size_t M = 5, N = 1 + static_cast<std::size_t>(rep % 3);
    const auto h = random_hamiltonian(M, rng);
    CHECK_NOTHROW(h.validate());
    const auto s = random_slater(M, N, 100 + static_cast<std::uint64_t>(rep));
    CHECK_NOTHROW(s.validate());

    const Eigen::VectorXcd psi = determinant_oracle(s);
    const auto cols = oracle::sector_columns(M, N);
    const Eigen::VectorXcd amp = fock_vector(s, ops::FockSector(M, N));
    for (std::size_t r = 0; r < cols.size(); ++r)
      CHECK(std::abs(amp(static_cast<Eigen::Index>(r)) - psi(static_cast<Eigen::Index>(cols[r]))) < 1e-13);

    const double e_ref = psi.dot(full_oracle(h) * psi).real();
    CHECK(energy(h, s) == doctest::Approx(e_ref).epsilon(1e-12));

    const auto d = density_matrix(s);
    std::vector<oracle::MatrixXcd> a;
    for (std::size_t k = 0; k < M; ++k) a.push_back(oracle::annihilator(k, M));
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) {
        const auto ref = psi.dot(a[i].adjoint() * a[j] * psi);
        CHECK(std::abs(d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - ref) < 1e-13);
      }
  }
}

TEST_CASE("energy and density are invariant under orbital rotations") {
  std::mt19937_64 rng(3);
  const auto h = random_hamiltonian(6, rng);
  const auto s = random_slater(6, 3, 7);
  const oracle::MatrixXcd q = oracle::random_unitary(3, rng);
  const SlaterState r{s.u * q};
  CHECK((density_matrix(r) - density_matrix(s)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(energy(h, r) == doctest::Approx(energy(h, s)).epsilon(1e-12));
  const auto sec = ops::FockSector(6, 3);
  CHECK((fock_vector(r, sec) - q.determinant() * fock_vector(s, sec)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("mean-field matrix is the energy gradient") {
  std::mt19937_64 rng(5);
  const auto h = random_hamiltonian(5, rng);
  const auto d = density_matrix(random_slater(5, 2, 11));
  const auto f = fock_matrix(h, d);
  CHECK((f - f.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  for (int rep = 0; rep < 4; ++rep) {
    const oracle::MatrixXcd dd = oracle::random_hermitian(5, rng);
    const double eps = 1e-5;
    const double num = (energy_from_density(h, d + eps * dd) - energy_from_density(h, d - eps * dd)) / (2 * eps);
    oracle::cplx lin = 0;
    for (Eigen::Index i = 0; i < 5; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) lin += f(i, j) * dd(i, j);
    CHECK(std::abs(lin.imag()) < 1e-12);
    CHECK(lin.real() == doctest::Approx(num).epsilon(1e-7));
  }
}

TEST_CASE("exchange-correlation term enters energy and mean field") {
  std::mt19937_64 rng(6);
  const auto h = random_hamiltonian(4, rng);
  const auto s = random_slater(4, 2, 1);
  const XCPotential xc{oracle::random_hermitian(4, rng)};
  const auto d = density_matrix(s);
  oracle::cplx tr = 0;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) tr += xc.v(i, j) * d(i, j);
  CHECK(energy(h, s, xc) == doctest::Approx(energy(h, s) + tr.real()).epsilon(1e-12));
  CHECK((fock_matrix(h, d, xc) - fock_matrix(h, d) - xc.v).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("non-interacting problems converge in one iteration") {
  std::mt19937_64 rng(8);
  auto h = random_hamiltonian(6, rng);
  h.two_body.clear();
  const auto init = random_slater(6, 3, 3);
  ScfOptions opt;
  const auto run = scf_iterate(h, init, opt);
  CHECK(run.converged);
  CHECK(run.iterations == 1);
  const Eigen::VectorXd eps = oracle::eigenvalues(h.one_body.cast<oracle::cplx>());
  CHECK(run.energy == doctest::Approx(h.constant + eps.head(3).sum()).epsilon(1e-12));
  CHECK(run.energy == doctest::Approx(exact_ground_energy(h, 3)).epsilon(1e-12));
}

TEST_CASE("SCF energies are variational") {
  std::mt19937_64 rng(31);
  ScfOptions opt;
  opt.restarts = 4;
  for (int rep = 0; rep < 8; ++rep) {
    const auto h = random_hamiltonian(6, rng, 0.5);
    opt.seed = static_cast<std::uint64_t>(rep);
    const auto r = scf_solve(h, 3, opt);
    CHECK(r.runs.size() == 5);
    CHECK(r.energy == doctest::Approx(energy(h, r.state)).epsilon(1e-12));
    CHECK(r.energy >= exact_ground_energy(h, 3) - 1e-9);
    for (const auto& run : r.runs) CHECK(run.energy >= r.energy);
    if (r.converged) CHECK(r.residual <= opt.tolerance);
  }
}

TEST_CASE("SCF is deterministic and validates its options") {
  std::mt19937_64 rng(2);
  const auto h = random_hamiltonian(5, rng);
  ScfOptions opt;
  opt.restarts = 3;
  opt.seed = 9;
  const auto a = scf_solve(h, 2, opt), b = scf_solve(h, 2, opt);
  CHECK(a.energy == b.energy);
  CHECK(a.best_run == b.best_run);
  CHECK(a.state.u == b.state.u);
  CHECK(random_slater(5, 2, 4).u == random_slater(5, 2, 4).u);

  opt.damping = 1.0;
  CHECK_THROWS_AS(scf_solve(h, 2, opt), ValidationError);
  CHECK_THROWS_AS(scf_solve(h, 6, ScfOptions{}), ValidationError);
  CHECK_THROWS_AS(SlaterState{Eigen::MatrixXcd::Ones(3, 2)}.validate(), ValidationError);
}

TEST_CASE("aufbau fills the lowest orbitals") {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(3, 3);
  f(0, 0) = 2;
  f(1, 1) = -1;
  f(2, 2) = 0.5;
  const auto s = aufbau(f, 2);
  const auto d = density_matrix(s);
  CHECK(std::abs(d(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(d(2, 2) - 1.0) < 1e-14);
  CHECK(std::abs(d(0, 0)) < 1e-14);
}

TEST_CASE("second-quantized text round trip") {
  std::mt19937_64 rng(1);
  const auto h = random_hamiltonian(4, rng);
  const auto text = format_second_quantized(h);
  CHECK(parse_second_quantized(text) == h);
  CHECK(format_second_quantized(parse_second_quantized(text)) == text);

  const auto p = parse_second_quantized("modes 2\n1 0 0 1.5\n1 0 0 0.5\n2 0 1 1 0 3\n");
  CHECK(p.one_body(0, 0) == 2.0);
  CHECK(p.two_body.at({0, 1, 1, 0}) == 3.0);
  CHECK(p.constant == 0.0);

  CHECK_THROWS_AS(parse_second_quantized("modes 2\n1 0 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_second_quantized("modes 2\n3 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_second_quantized("1 0 0 1\n"), ParseError);
  auto bad = SecondQuantizedHamiltonian::zero(2);
  bad.add_one_body(0, 1, 1.0);
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("Ising instances") {
  CHECK(grid_neighbours(2, 0, 1));
  CHECK(grid_neighbours(2, 0, 2));
  CHECK(grid_neighbours(2, 0, 4));
  CHECK(!grid_neighbours(2, 0, 3));
  CHECK(!grid_neighbours(2, 1, 2));
  const auto inst = random_ising(2, 0);
  CHECK(inst.edges.size() == 12);
  CHECK(random_ising(2, 0) == inst);
  CHECK_NOTHROW(inst.validate());
  IsingInstance bad{2, {{0, 3, 1}}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.edges = {{0, 1, 2}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  CHECK(config_string(0b01, 2) == "ud");
  const auto text = format_ising(inst);
  CHECK(parse_ising(text) == inst);
  CHECK_THROWS_AS(parse_ising("ising 2\n0 3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_ising("ising 2\n0 1 5\n"), ParseError);
}

TEST_CASE("Ising oracle") {
  IsingInstance one{1, {{0, 1, 1}}};
  const auto g = ising_oracle(one);
  CHECK(g.energy == -1);
  CHECK(g.config == 0b01);
  CHECK(ising_energy(one, 0b00) == 1);
  IsingInstance ferro{1, {{0, 1, -1}}};
  CHECK(ising_oracle(ferro).config == 0b00);

  // brute force with an independent spin convention check
  const auto inst = random_ising(2, 5);
  const auto o = ising_oracle(inst);
  for (std::uint64_t c = 0; c < 256; ++c) {
    double e = 0;
    for (const auto& ed : inst.edges) {
      const int si = ((c >> (7 - ed.i)) & 1) ? -1 : 1, sj = ((c >> (7 - ed.j)) & 1) ? -1 : 1;
      e += ed.J * si * sj;
    }
    CHECK(ising_energy(inst, c) == e);
    CHECK(e >= o.energy);
    if (e == o.energy) CHECK(c >= o.config);
  }
  CHECK_THROWS_AS(ising_oracle(random_ising(4, 0)), ResourceError);
}

TEST_CASE("Ising embedding") {
  const auto inst = random_ising(2, 0);
  const double U = default_penalty(inst);
  CHECK(U == doctest::Approx(120));
  const auto h = embed_ising(inst, U);
  CHECK_NOTHROW(h.validate());
  for (std::uint64_t c = 0; c < 256; ++c) {
    const auto s = classical_state(8, c);
    CHECK(energy(h, s) == doctest::Approx(ising_energy(inst, c)).epsilon(1e-14));
    CHECK(classical_config(s) == c);
  }
  CHECK_THROWS_AS(embed_ising(inst, 4.0 * 12 - 1), ValidationError);

  // penalty dominance: the exact half-filled ground state is classical
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto small = random_ising(1, seed);
    CHECK(exact_ground_energy(embed_ising(small, default_penalty(small)), 2) ==
          doctest::Approx(ising_oracle(small).energy).epsilon(1e-12));
  }

  SlaterState mixed = classical_state(2, 0);
  mixed.u(0, 0) = mixed.u(1, 0) = 1 / std::sqrt(2.0);
  CHECK(!classical_config(mixed).has_value());
}
