#include "hred/lattice/hubbard_io.hpp"

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/text_format.hpp"

namespace hred::lattice {

using ops::format_real;

std::string format_hubbard(const HubbardModel& m) {
  std::string out = "hubbard 1\n";
  out += fmt::format("sites {}\nt {}\nU {}\n", m.sites, format_real(m.t), format_real(m.U));
  for (const auto& e : m.edges) {
    out += fmt::format("edge {} {}", e.i, e.j);
    if (e.t) out += " " + format_real(*e.t);
    out += '\n';
  }
  for (std::size_t i = 0; i < m.fields.size(); ++i) {
    const auto& b = m.fields[i];
    out += fmt::format("field {} {} {} {}\n", i, format_real(b[0]), format_real(b[1]), format_real(b[2]));
  }
  return out;
}

HubbardModel parse_hubbard(std::string_view text) {
  const auto lines = ops::tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "hubbard")
    throw ParseError(lines.empty() ? 1 : lines[0].number, lines.empty() ? "" : lines[0].tokens[0],
                     "expected 'hubbard 1' header");
  if (lines[0].tokens.size() != 2 || lines[0].tokens[1] != "1")
    throw ParseError(lines[0].number, lines[0].tokens.back(), "unsupported hubbard format version");

  HubbardModel m;
  bool have_sites = false, have_u = false;
  std::vector<std::pair<std::size_t, std::array<double, 3>>> fields;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const auto& key = l.tokens[0];
    auto want = [&](std::size_t lo, std::size_t hi) {
      if (l.tokens.size() < lo || l.tokens.size() > hi)
        throw ParseError(l.number, l.tokens.back(), fmt::format("'{}' has the wrong number of fields", key));
    };
    if (key == "sites") {
      want(2, 2);
      m.sites = ops::parse_index(l.tokens[1], l.number);
      have_sites = true;
    } else if (key == "t") {
      want(2, 2);
      m.t = ops::parse_real(l.tokens[1], l.number);
    } else if (key == "U") {
      want(2, 2);
      m.U = ops::parse_real(l.tokens[1], l.number);
      have_u = true;
    } else if (key == "edge") {
      want(3, 4);
      HubbardEdge e{ops::parse_index(l.tokens[1], l.number), ops::parse_index(l.tokens[2], l.number), std::nullopt};
      if (l.tokens.size() == 4) e.t = ops::parse_real(l.tokens[3], l.number);
      m.edges.push_back(e);
    } else if (key == "field") {
      want(5, 5);
      fields.push_back({ops::parse_index(l.tokens[1], l.number),
                        {ops::parse_real(l.tokens[2], l.number), ops::parse_real(l.tokens[3], l.number),
                         ops::parse_real(l.tokens[4], l.number)}});
    } else {
      throw ParseError(l.number, key, "unknown key");
    }
  }
  if (!have_sites) throw ParseError(lines.back().number, "sites", "missing 'sites'");
  if (!have_u) throw ParseError(lines.back().number, "U", "missing 'U'");
  if (!fields.empty()) {
    m.fields.assign(m.sites, {0, 0, 0});
    for (const auto& [i, b] : fields) {
      if (i >= m.sites) throw ValidationError(fmt::format("field for site {} out of range", i));
      m.fields[i] = b;
    }
  }
  m.validate();
  return m;
}

}  // namespace hred::lattice
