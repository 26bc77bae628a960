#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "hred/errors.hpp"
#include "hred/ops/fermion.hpp"
#include "hred/ops/jordan.hpp"
#include "hred/ops/pauli.hpp"
#include "hred/ops/realize.hpp"
#include "hred/ops/spectrum.hpp"
#include "hred/ops/text_format.hpp"
#include "oracles.hpp"

using namespace hred;
using namespace hred::ops;

namespace {

SpinHamiltonian heisenberg_pair() {
  SpinHamiltonian h(2);
  for (auto a : {Pauli::X, Pauli::Y, Pauli::Z}) h.add(1.0, {{0, a}, {1, a}});
  return h;
}

SpinHamiltonian random_spin(std::size_t n, std::mt19937_64& rng, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> site(0, n - 1);
  std::uniform_int_distribution<int> axis(0, 3);
  std::normal_distribution<double> g;
  SpinHamiltonian h(n);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<PauliFactor> f;
    for (std::size_t s = 0; s < n; ++s) {
      const int a = axis(rng);
      if (a) f.push_back({s, static_cast<Pauli>(a)});
    }
    h.add(PauliTerm(g(rng), PauliString::from_factors(f)));
  }
  return h;
}

// Oracle realization: Kronecker products per term.
oracle::MatrixXcd kron_realize(const SpinHamiltonian& h) {
  const auto n = h.num_spins();
  oracle::MatrixXcd m = oracle::MatrixXcd::Zero(1 << n, 1 << n);
  for (const auto& t : h.terms()) {
    std::string axes(n, 'I');
    for (const auto& f : t.factors()) axes[f.site] = pauli_char(f.axis);
    m += t.coefficient() * oracle::pauli_string(axes);
  }
  return m;
}

}  // namespace

TEST_CASE("pauli products follow the cyclic rule") {
  auto [ph, p] = multiply(Pauli::X, Pauli::Y);
  CHECK(p == Pauli::Z);
  CHECK(ph == cplx(0, 1));
  auto [ph2, p2] = multiply(Pauli::Z, Pauli::Y);
  CHECK(p2 == Pauli::X);
  CHECK(ph2 == cplx(0, -1));
  auto [ph3, p3] = multiply(Pauli::Y, Pauli::Y);
  CHECK(p3 == Pauli::I);
  CHECK(ph3 == cplx(1, 0));
  for (auto a : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
    for (auto b : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      auto [phase, c] = multiply(a, b);
      CHECK((pauli_matrix(a) * pauli_matrix(b) - phase * pauli_matrix(c)).norm() < 1e-15);
    }
}

TEST_CASE("pauli strings are canonical") {
  auto s = PauliString::from_factors({{3, Pauli::Z}, {1, Pauli::X}});
  CHECK(s.to_string() == "X@1 Z@3");
  CHECK(s.at(3) == Pauli::Z);
  CHECK(s.at(2) == Pauli::I);
  CHECK_THROWS_AS(PauliString::from_factors({{1, Pauli::X}, {1, Pauli::Y}}), ValidationError);
  CHECK_THROWS_AS(PauliString::from_factors({{1, Pauli::I}}), ValidationError);
  CHECK_THROWS_AS(PauliTerm(1.0, std::vector<PauliFactor>{{2, Pauli::X}, {1, Pauli::Y}}), ValidationError);
  CHECK(PauliString{}.to_string() == "I");
  SpinHamiltonian h(2);
  CHECK_THROWS_AS(h.add(1.0, {{2, Pauli::X}}), ValidationError);
}

TEST_CASE("realize_spin examples") {
  SpinHamiltonian z(1);
  z.add(1.0, {{0, Pauli::Z}});
  Eigen::MatrixXcd expect(2, 2);
  expect << 1, 0, 0, -1;
  CHECK((realize_spin(z) - expect).norm() == 0.0);

  CHECK(realize_spin(SpinHamiltonian(3)).isZero(0));
  CHECK(realize_spin(SpinHamiltonian(3)).rows() == 8);

  const auto m = realize_spin(heisenberg_pair());
  Eigen::MatrixXcd ss(4, 4);
  ss << 1, 0, 0, 0, 0, -1, 2, 0, 0, 2, -1, 0, 0, 0, 0, 1;
  CHECK((m - ss).norm() == 0.0);

  const auto e = eig_hermitian(m).eigenvalues;
  CHECK(e(0) == doctest::Approx(-3).epsilon(1e-14));
  for (int i = 1; i < 4; ++i) CHECK(e(i) == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("realize_spin matches kronecker products") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const auto h = random_spin(4, rng, 6);
    CHECK((realize_spin(h) - kron_realize(h)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((realize_spin_sparse(h).toDense() - kron_realize(h)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("realize_spin is linear and canonicalization is sound") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const auto a = random_spin(3, rng, 5), b = random_spin(3, rng, 5);
    const double x = 0.7, y = -1.3;
    CHECK((realize_spin(a.scaled(x) + b.scaled(y)) - (x * realize_spin(a) + y * realize_spin(b))).norm() < 1e-12);
    const auto c = a.canonicalized();
    CHECK((realize_spin(c) - realize_spin(a)).norm() < 1e-12);
    CHECK(c.canonicalized() == c);
    std::vector<PauliTerm> rev(a.terms().rbegin(), a.terms().rend());
    CHECK((realize_spin(SpinHamiltonian(3, rev)) - realize_spin(a)).norm() < 1e-12);
  }
}

TEST_CASE("dense limit is enforced and configurable") {
  ::setenv("HRED_DENSE_SPINS", "3", 1);
  CHECK(dense_spin_limit() == 3);
  CHECK_THROWS_AS(realize_spin(SpinHamiltonian(4)), ResourceError);
  ::unsetenv("HRED_DENSE_SPINS");
  CHECK(dense_spin_limit() == 14);
  CHECK(realize_spin(SpinHamiltonian(4)).rows() == 16);
}

TEST_CASE("fermion operators are normal ordered") {
  FermionOperator op(3);
  op.add(1.0, {{0, false}, {1, true}});  // a_0 a^dag_1 = -a^dag_1 a_0
  REQUIRE(op.terms().size() == 1);
  const auto& [m, c] = *op.terms().begin();
  CHECK(is_normal_ordered(m));
  CHECK(c == cplx(-1));
  CHECK(m == Monomial{{1, true}, {0, false}});

  FermionOperator n(2);
  n.add(1.0, {{0, false}, {0, true}});  // a a^dag = 1 - n
  CHECK(n.terms().size() == 2);
  CHECK(n.terms().at(Monomial{}) == cplx(1));
  CHECK(n.terms().at(Monomial{{0, true}, {0, false}}) == cplx(-1));

  FermionOperator zero(2);
  zero.add(1.0, {{1, true}, {1, true}});
  CHECK(zero.empty());
}

TEST_CASE("anticommutators on the full Fock space") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto sector = FockSector::full(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FermionOperator ai(n), adj(n), aj(n);
        ai.add(1.0, {{i, false}});
        adj.add(1.0, {{j, true}});
        aj.add(1.0, {{j, false}});
        const auto A = realize_fermion(ai, sector);
        const auto Bd = realize_fermion(adj, sector);
        const auto B = realize_fermion(aj, sector);
        const Eigen::MatrixXcd anti = A * Bd + Bd * A;
        const Eigen::MatrixXcd expect =
            (i == j ? 1.0 : 0.0) * Eigen::MatrixXcd::Identity(1 << n, 1 << n);
        CHECK((anti - expect).cwiseAbs().maxCoeff() == 0.0);
        CHECK((A * B + B * A).cwiseAbs().maxCoeff() == 0.0);
        CHECK((A - oracle::annihilator(i, n)).cwiseAbs().maxCoeff() == 0.0);
      }
  }
}

TEST_CASE("realize_fermion on sectors") {
  const FockSector s(2, 1);
  CHECK(s.dimension() == 2);
  CHECK(s.label(0) == "10");
  CHECK(s.label(1) == "01");
  Eigen::MatrixXcd n0(2, 2), hop(2, 2);
  n0 << 1, 0, 0, 0;
  hop << 0, 1, 1, 0;
  CHECK((realize_fermion(FermionOperator::number(2, 0), s) - n0).norm() == 0.0);
  CHECK((realize_fermion(FermionOperator::hop(2, 0, 1) + FermionOperator::hop(2, 1, 0), s) - hop).norm() == 0.0);

  FermionOperator create(2);
  create.add(1.0, {{0, true}});
  CHECK_THROWS_AS(realize_fermion(create, s), ValidationError);
  CHECK_THROWS_AS(realize_fermion(FermionOperator::number(3, 0), s), ValidationError);

  CHECK(FockSector(6, 3).dimension() == 20);
  CHECK(FockSector(12, 6).dimension() == 924);
}

TEST_CASE("realize_fermion matches the Jordan-Wigner oracle") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const std::size_t n = 5;
  std::vector<Eigen::MatrixXcd> a;
  for (std::size_t k = 0; k < n; ++k) a.push_back(oracle::annihilator(k, n));
  FermionOperator op(n);
  Eigen::MatrixXcd ref = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
  for (int t = 0; t < 12; ++t) {
    std::uniform_int_distribution<std::size_t> m(0, n - 1);
    const std::size_t i = m(rng), j = m(rng), k = m(rng), l = m(rng);
    const double c = g(rng);
    op.add(c, {{i, true}, {j, true}, {k, false}, {l, false}});
    ref += c * a[i].adjoint() * a[j].adjoint() * a[k] * a[l];
    const double d = g(rng);
    op.add(d, {{l, false}, {i, true}});
    ref += d * a[l] * a[i].adjoint();
  }
  CHECK((realize_fermion(op, FockSector::full(n)) - ref).cwiseAbs().maxCoeff() < 1e-13);
  for (std::size_t p = 0; p <= n; ++p) {
    if (!op.conserves_particle_number()) break;
    const auto cols = oracle::sector_columns(n, p);
    CHECK((realize_fermion(op, FockSector(n, p)) - oracle::restrict(ref, cols)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("exchange operator on the singly occupied two-site space") {
  // modes (site, spin) -> 2 site + spin
  FermionOperator ex(4);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) ex.add(1.0, {{s, true}, {2 + t, true}, {2 + s, false}, {t, false}});
  const FockSector sector(4, 2);
  const auto m = realize_fermion(ex, sector);
  // singly occupied: up-up {0,2}, up-down {0,3}, down-up {1,2}, down-down {1,3}
  std::vector<std::size_t> idx;
  for (auto st : {0b0101u, 0b1001u, 0b0110u, 0b1010u}) idx.push_back(*sector.index_of(st));
  Eigen::MatrixXcd sub(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) sub(r, c) = m(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
  Eigen::MatrixXcd expect(4, 4);
  expect << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  CHECK((sub - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("jordan map examples") {
  const auto modes = interleaved_modes(2);
  const auto z = jordan_map_spin_to_fermion(PauliTerm(1.0, PauliString::single(0, Pauli::Z)), modes, 4);
  const auto expect = FermionOperator::number(4, 0) - FermionOperator::number(4, 1);
  CHECK((z - expect).pruned(1e-15).empty());

  const auto id = jordan_map_spin_to_fermion(PauliTerm::identity(2.5), modes, 4);
  CHECK((id - FermionOperator::scalar(4, 2.5)).pruned(1e-15).empty());

  const auto zz = jordan_map_spin_to_fermion(
      PauliTerm(1.0, PauliString::pair(0, Pauli::Z, 1, Pauli::Z)), modes, 4);
  FermionOperator ref(4);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      ref += (FermionOperator::number(4, p) * FermionOperator::number(4, 2 + q)).scaled((p + q) % 2 ? -1.0 : 1.0);
  CHECK((zz - ref).pruned(1e-15).empty());

  SiteModes partial{{0, {0, 1}}};
  CHECK_THROWS_AS(jordan_map_spin_to_fermion(PauliTerm(1.0, PauliString::single(1, Pauli::X)), partial, 4),
                  ValidationError);
}

TEST_CASE("jordan map preserves spectra on the singly occupied subspace") {
  std::mt19937_64 rng(5);
  const auto modes = interleaved_modes(2);
  const FockSector sector(4, 2);
  std::vector<std::size_t> idx;
  for (auto st : {0b0101u, 0b1001u, 0b0110u, 0b1010u}) idx.push_back(*sector.index_of(st));
  for (int rep = 0; rep < 6; ++rep) {
    const auto h = rep == 0 ? [] {
      SpinHamiltonian zz(2);
      zz.add(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
      return zz;
    }()
                            : random_spin(2, rng, 4);
    const auto f = realize_fermion(jordan_map_spin_to_fermion(h, modes, 4), sector);
    Eigen::MatrixXcd sub(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) sub(r, c) = f(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
    // same basis order: spin config 00, 01, 10, 11 with site 0 most significant
    CHECK((sub - realize_spin(h)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((oracle::eigenvalues(sub) - oracle::eigenvalues(realize_spin(h))).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hermitian eigensolvers") {
  Eigen::MatrixXcd d(2, 2);
  d << 1, 0, 0, -1;
  auto s = eig_hermitian(d);
  CHECK(s.eigenvalues(0) == -1);
  CHECK(s.eigenvalues(1) == 1);
  CHECK(eig_hermitian(Eigen::MatrixXcd::Zero(2, 2)).eigenvalues.isZero(0));

  Eigen::MatrixXcd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(eig_hermitian(bad), ValidationError);

  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 5; ++rep) {
    const auto m = oracle::random_hermitian(24, rng);
    const auto sp = eig_hermitian(m);
    const Eigen::MatrixXcd rec = sp.eigenvectors * sp.eigenvalues.cast<cplx>().asDiagonal() * sp.eigenvectors.adjoint();
    CHECK((rec - m).norm() <= 1e-9 * m.norm());
    for (Eigen::Index i = 1; i < sp.eigenvalues.size(); ++i) CHECK(sp.eigenvalues(i) >= sp.eigenvalues(i - 1));
    const auto low = lowest_eigenpairs(m, 5);
    CHECK((low.eigenvalues - sp.eigenvalues.head(5)).cwiseAbs().maxCoeff() < 1e-10);
    for (Eigen::Index k = 0; k < 5; ++k)
      CHECK((m * low.eigenvectors.col(k) - low.eigenvalues(k) * low.eigenvectors.col(k)).norm() < 1e-9);
  }
}

TEST_CASE("sparse Lanczos agrees with dense on low levels") {
  std::mt19937_64 rng(9);
  const auto h = random_spin(8, rng, 20);
  const auto dense = eigenvalues_hermitian(realize_spin(h));
  const auto sp = lowest_eigenpairs_sparse(realize_spin_sparse(h), 4);
  CHECK((sp.eigenvalues - dense.head(4)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("spin text format round trip and errors") {
  const std::string text = "# demo\nspins 3\n1.0 Z@0 Z@1\n-0.5 X@2\n0.25\n";
  const auto h = parse_spin_hamiltonian(text);
  CHECK(h.num_spins() == 3);
  CHECK(h.terms().size() == 3);
  CHECK(parse_spin_hamiltonian(format_spin_hamiltonian(h)) == h);

  std::mt19937_64 rng(2);
  const auto r = random_spin(4, rng, 8);
  CHECK(parse_spin_hamiltonian(format_spin_hamiltonian(r)) == r);

  try {
    parse_spin_hamiltonian("spins 2\n1.0 Q@0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.token() == "Q@0");
  }
  CHECK_THROWS_AS(parse_spin_hamiltonian("spins 2\n1.0 X@5\n"), ParseError);
  CHECK_THROWS_AS(parse_spin_hamiltonian("spins 2\nabc X@0\n"), ParseError);
  CHECK_THROWS_AS(parse_spin_hamiltonian("1.0 X@0\n"), ParseError);
}

TEST_CASE("fermion text format round trip") {
  FermionOperator op(4);
  op.add(0.5, {{0, true}, {1, false}});
  op.add(0.5, {{1, true}, {0, false}});
  op.add(2.0, {{0, true}, {2, true}, {2, false}, {0, false}});
  const auto text = format_fermion_operator(op);
  const auto back = parse_fermion_operator(text);
  CHECK((back - op).pruned(0).empty());
  CHECK(back.num_modes() == 4);
  CHECK_THROWS_AS(parse_fermion_operator("modes 2\n1.0 +3\n"), ParseError);
}
