#include "hred/scf/ising.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/text_format.hpp"

namespace hred::scf {

bool grid_neighbours(std::size_t L, std::size_t i, std::size_t j) {
  const std::size_t n = 2 * L * L;
  if (i >= n || j >= n || i == j) return false;
  auto coord = [L](std::size_t s) {
    return std::array<long, 3>{static_cast<long>(s % L), static_cast<long>((s / L) % L), static_cast<long>(s / (L * L))};
  };
  const auto a = coord(i), b = coord(j);
  long dist = 0;
  for (int k = 0; k < 3; ++k) dist += std::abs(a[k] - b[k]);
  return dist == 1;
}

void IsingInstance::validate() const {
  if (L == 0 || L > 5) throw ValidationError(fmt::format("lattice side must be 1..5 (got {})", L));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.J < -1 || e.J > 1) throw ValidationError(fmt::format("coupling {} is not in {{-1, 0, 1}}", e.J));
    if (!grid_neighbours(L, e.i, e.j))
      throw ValidationError(fmt::format("({}, {}) is not a nearest-neighbour pair", e.i, e.j));
    if (!seen.insert(std::minmax(e.i, e.j)).second)
      throw ValidationError(fmt::format("duplicate edge ({}, {})", e.i, e.j));
  }
}

IsingInstance random_ising(std::size_t L, std::uint64_t seed) {
  IsingInstance inst{L, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coupling(-1, 1);
  const std::size_t n = inst.num_sites();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (grid_neighbours(L, i, j)) inst.edges.push_back({i, j, coupling(rng)});
  inst.validate();
  return inst;
}

namespace {

int spin(std::uint64_t config, std::size_t n, std::size_t site) {
  return ((config >> (n - 1 - site)) & 1) ? -1 : 1;
}

}  // namespace

double ising_energy(const IsingInstance& inst, std::uint64_t config) {
  const std::size_t n = inst.num_sites();
  long e = 0;
  for (const auto& edge : inst.edges) e += edge.J * spin(config, n, edge.i) * spin(config, n, edge.j);
  return static_cast<double>(e);
}

IsingGround ising_oracle(const IsingInstance& inst, std::size_t max_L) {
  inst.validate();
  if (inst.L > max_L)
    throw ResourceError(fmt::format("exhaustive search over 2^{} configurations exceeds the L <= {} limit",
                                    inst.num_sites(), max_L));
  const std::size_t n = inst.num_sites();
  IsingGround best{std::numeric_limits<double>::infinity(), 0};
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    const double e = ising_energy(inst, c);
    if (e < best.energy) best = {e, c};
  }
  return best;
}

double default_penalty(const IsingInstance& inst) {
  return std::max(1.0, 10.0 * static_cast<double>(inst.edges.size()));
}

SecondQuantizedHamiltonian embed_ising(const IsingInstance& inst, double U) {
  inst.validate();
  const double floor = 4.0 * static_cast<double>(inst.edges.size());
  if (!(U > 0) || U < floor)
    throw ValidationError(fmt::format("penalty U = {} must be positive and at least 4 * edges = {}", U, floor));
  const std::size_t n = inst.num_sites();
  auto h = SecondQuantizedHamiltonian::zero(2 * n);
  // n_a n_b (a != b) = 1/2 (a^dag_a a^dag_b a_b a_a + a^dag_b a^dag_a a_a a_b)
  auto number_pair = [&h](std::size_t a, std::size_t b, double c) {
    h.add_two_body(a, b, b, a, c);
    h.add_two_body(b, a, a, b, c);
  };
  for (std::size_t i = 0; i < n; ++i) number_pair(2 * i, 2 * i + 1, U);
  for (const auto& e : inst.edges) {
    if (e.J == 0) continue;
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q)
        number_pair(2 * e.i + p, 2 * e.j + q, (p + q) % 2 ? -e.J : e.J);
  }
  return h;
}

SlaterState classical_state(std::size_t num_sites, std::uint64_t config) {
  if (num_sites == 0 || num_sites > 31) throw ValidationError("site count must be 1..31");
  if (num_sites < 64 && (config >> num_sites) != 0) throw ValidationError("configuration has bits beyond the sites");
  SlaterState s{Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(2 * num_sites),
                                       static_cast<Eigen::Index>(num_sites))};
  for (std::size_t i = 0; i < num_sites; ++i) {
    const std::size_t down = (config >> (num_sites - 1 - i)) & 1;
    s.u(static_cast<Eigen::Index>(2 * i + down), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return s;
}

std::optional<std::uint64_t> classical_config(const SlaterState& s, double tol) {
  if (s.modes() != 2 * s.particles()) return std::nullopt;
  const Eigen::MatrixXcd d = density_matrix(s);
  const std::size_t n = s.particles();
  std::uint64_t config = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double up = d(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * i)).real();
    const double dn = d(static_cast<Eigen::Index>(2 * i + 1), static_cast<Eigen::Index>(2 * i + 1)).real();
    if (std::abs(up - 1) <= tol && std::abs(dn) <= tol) continue;
    if (std::abs(dn - 1) <= tol && std::abs(up) <= tol) {
      config |= std::uint64_t{1} << (n - 1 - i);
      continue;
    }
    return std::nullopt;
  }
  return config;
}

std::string format_ising(const IsingInstance& inst) {
  std::string out = fmt::format("ising {}\n", inst.L);
  for (const auto& e : inst.edges) out += fmt::format("{} {} {}\n", e.i, e.j, e.J);
  return out;
}

IsingInstance parse_ising(std::string_view text) {
  const auto lines = ops::tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "ising" || lines[0].tokens.size() != 2)
    throw ParseError(lines.empty() ? 1 : lines[0].number, lines.empty() ? "" : lines[0].tokens[0],
                     "expected 'ising L' header");
  IsingInstance inst{ops::parse_index(lines[0].tokens[1], lines[0].number), {}};
  if (inst.L == 0 || inst.L > 5) throw ParseError(lines[0].number, lines[0].tokens[1], "lattice side must be 1..5");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.tokens.size() != 3) throw ParseError(l.number, l.tokens.back(), "edge lines are 'i j J'");
    IsingEdge e{ops::parse_index(l.tokens[0], l.number), ops::parse_index(l.tokens[1], l.number), 0};
    const auto& jt = l.tokens[2];
    if (jt == "1" || jt == "+1") e.J = 1;
    else if (jt == "-1") e.J = -1;
    else if (jt == "0") e.J = 0;
    else throw ParseError(l.number, jt, "coupling must be -1, 0 or 1");
    if (!grid_neighbours(inst.L, e.i, e.j)) throw ParseError(l.number, l.tokens[1], "not a nearest-neighbour pair");
    inst.edges.push_back(e);
  }
  try {
    inst.validate();
  } catch (const ValidationError& err) {
    throw ParseError(lines.back().number, lines.back().tokens[0], err.what());
  }
  return inst;
}

std::string config_string(std::uint64_t config, std::size_t num_sites) {
  std::string s;
  for (std::size_t i = 0; i < num_sites; ++i) s += ((config >> (num_sites - 1 - i)) & 1) ? 'd' : 'u';
  return s;
}

}  // namespace hred::scf
