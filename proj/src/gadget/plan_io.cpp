#include "hred/gadget/plan_io.hpp"

#include <cmath>
#include <map>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/ops/text_format.hpp"

namespace hred::gadget {

using ops::format_real;
using ops::TextLine;

namespace {

std::string real_or_inf(double v) { return std::isinf(v) ? std::string("inf") : format_real(v); }

double parse_real_or_inf(const std::string& tok, std::size_t line) {
  if (tok == "inf") return kNoPrecision;
  return ops::parse_real(tok, line);
}

Pauli parse_axis(const std::string& tok, std::size_t line) {
  if (tok.size() != 1) throw ParseError(line, tok, "expected one of I, X, Y, Z");
  try {
    return ops::pauli_from_char(tok[0]);
  } catch (const ValidationError&) {
    throw ParseError(line, tok, "expected one of I, X, Y, Z");
  }
}

void expect_tokens(const TextLine& l, std::size_t n) {
  if (l.tokens.size() != n)
    throw ParseError(l.number, l.tokens.back(), fmt::format("expected {} fields, found {}", n, l.tokens.size()));
}

ops::SpinHamiltonian parse_spins_section(const std::vector<TextLine>& lines, std::size_t header_line) {
  if (lines.empty() || lines[0].tokens[0] != "spins" || lines[0].tokens.size() != 2)
    throw ParseError(header_line, lines.empty() ? "" : lines[0].tokens[0], "section must start with 'spins N'");
  const auto n = ops::parse_index(lines[0].tokens[1], lines[0].number);
  if (n == 0) throw ParseError(lines[0].number, lines[0].tokens[1], "spin count must be positive");
  return ops::parse_spin_terms(n, std::vector<TextLine>(lines.begin() + 1, lines.end()));
}

ops::PauliTerm parse_term_tokens(const TextLine& l, std::size_t first) {
  const double c = ops::parse_real(l.tokens[first], l.number);
  std::vector<ops::PauliFactor> f;
  for (std::size_t k = first + 1; k < l.tokens.size(); ++k) {
    const auto& tok = l.tokens[k];
    if (tok.size() < 3 || tok[1] != '@') throw ParseError(l.number, tok, "expected axis@site");
    f.push_back({ops::parse_index(tok.substr(2), l.number), parse_axis(tok.substr(0, 1), l.number)});
  }
  try {
    return ops::PauliTerm(c, ops::PauliString::from_factors(std::move(f)));
  } catch (const ValidationError& e) {
    throw ParseError(l.number, l.tokens.back(), e.what());
  }
}

}  // namespace

std::string format_plan(const GadgetPlan& p) {
  std::string out = "plan 1\n";
  out += fmt::format("precision {}\n", real_or_inf(p.target_precision));
  out += fmt::format("depth {}\n", p.depth);
  out += fmt::format("offset {}\n", format_real(p.offset));
  out += fmt::format("total_error_budget {}\n", format_real(p.total_error_budget));
  out += "[source]\n" + ops::format_spin_hamiltonian(p.source);
  out += "[layers]\n# kind kappa lambda Delta error gadgets\n";
  for (const auto& l : p.layers)
    out += fmt::format("layer {} {} {} {} {} {}\n", layer_kind_name(l.kind), format_real(l.kappa),
                       format_real(l.scale.lambda), format_real(l.scale.delta), format_real(l.scale.error),
                       l.gadget_count);
  out += "[gadgets]\n# layer kind mediator theta phi lambda Delta frozen\n";
  for (const auto& g : p.gadgets) {
    out += fmt::format("gadget {} {} {} {} {} {} {} {}\n", g.layer, layer_kind_name(g.kind), g.mediator,
                       format_real(g.theta), format_real(g.phi), format_real(g.lambda), format_real(g.delta),
                       ops::pauli_char(g.frozen));
    for (const auto& t : g.target) {
      out += "target " + format_real(t.coefficient());
      for (const auto& f : t.factors()) out += fmt::format(" {}@{}", ops::pauli_char(f.axis), f.site);
      out += '\n';
    }
    for (const auto& c : g.couplings)
      out += fmt::format("coupling {} {} {} {}\n", format_real(c.coefficient), c.site, ops::pauli_char(c.system_axis),
                         ops::pauli_char(c.mediator_axis));
  }
  out += "[compiled]\n" + ops::format_spin_hamiltonian(p.compiled);
  out += "[verification]\n";
  out += fmt::format("status {}\n", verification_status_name(p.verification.status));
  out += fmt::format("measured {}\n", format_real(p.verification.measured));
  out += fmt::format("tolerance_factor {}\n", format_real(p.verification.tolerance_factor));
  if (!p.verification.note.empty()) out += fmt::format("note {}\n", p.verification.note);
  return out;
}

GadgetPlan parse_plan(std::string_view text) {
  const auto lines = ops::tokenize(text);
  std::map<std::string, std::vector<TextLine>> sections;
  std::map<std::string, std::size_t> section_line;
  std::string current = "header";
  for (const auto& l : lines) {
    const auto& t0 = l.tokens[0];
    if (t0.size() >= 2 && t0.front() == '[' && t0.back() == ']') {
      current = t0.substr(1, t0.size() - 2);
      if (sections.count(current)) throw ParseError(l.number, t0, "duplicate section");
      sections[current];
      section_line[current] = l.number;
      continue;
    }
    sections[current].push_back(l);
  }
  for (const char* s : {"source", "layers", "gadgets", "compiled", "verification"})
    if (!sections.count(s)) throw ParseError(lines.empty() ? 1 : lines.back().number, s, "missing section");

  GadgetPlan p;
  bool seen_magic = false;
  for (const auto& l : sections["header"]) {
    expect_tokens(l, 2);
    const auto& k = l.tokens[0];
    const auto& v = l.tokens[1];
    if (k == "plan") {
      if (v != "1") throw ParseError(l.number, v, "unsupported plan version");
      seen_magic = true;
    } else if (k == "precision") {
      p.target_precision = parse_real_or_inf(v, l.number);
    } else if (k == "depth") {
      p.depth = ops::parse_index(v, l.number);
    } else if (k == "offset") {
      p.offset = ops::parse_real(v, l.number);
    } else if (k == "total_error_budget") {
      p.total_error_budget = ops::parse_real(v, l.number);
    } else {
      throw ParseError(l.number, k, "unknown header key");
    }
  }
  if (!seen_magic) throw ParseError(1, "", "missing 'plan 1' header");

  p.source = parse_spins_section(sections["source"], section_line["source"]);
  p.compiled = parse_spins_section(sections["compiled"], section_line["compiled"]);

  for (const auto& l : sections["layers"]) {
    if (l.tokens[0] != "layer") throw ParseError(l.number, l.tokens[0], "expected 'layer'");
    expect_tokens(l, 7);
    LayerRecord r;
    try {
      r.kind = layer_kind_from_name(l.tokens[1]);
    } catch (const ValidationError& e) {
      throw ParseError(l.number, l.tokens[1], e.what());
    }
    r.kappa = ops::parse_real(l.tokens[2], l.number);
    r.scale.lambda = ops::parse_real(l.tokens[3], l.number);
    r.scale.delta = ops::parse_real(l.tokens[4], l.number);
    r.scale.error = ops::parse_real(l.tokens[5], l.number);
    r.gadget_count = ops::parse_index(l.tokens[6], l.number);
    p.layers.push_back(r);
  }

  for (const auto& l : sections["gadgets"]) {
    const auto& k = l.tokens[0];
    if (k == "gadget") {
      expect_tokens(l, 9);
      GadgetRecord g;
      g.layer = ops::parse_index(l.tokens[1], l.number);
      try {
        g.kind = layer_kind_from_name(l.tokens[2]);
      } catch (const ValidationError& e) {
        throw ParseError(l.number, l.tokens[2], e.what());
      }
      g.mediator = ops::parse_index(l.tokens[3], l.number);
      g.theta = ops::parse_real(l.tokens[4], l.number);
      g.phi = ops::parse_real(l.tokens[5], l.number);
      g.lambda = ops::parse_real(l.tokens[6], l.number);
      g.delta = ops::parse_real(l.tokens[7], l.number);
      g.frozen = parse_axis(l.tokens[8], l.number);
      p.gadgets.push_back(std::move(g));
      continue;
    }
    if (p.gadgets.empty()) throw ParseError(l.number, k, "line precedes the first gadget");
    auto& g = p.gadgets.back();
    if (k == "target") {
      if (l.tokens.size() < 2) throw ParseError(l.number, k, "target needs a coefficient");
      g.target.push_back(parse_term_tokens(l, 1));
    } else if (k == "coupling") {
      expect_tokens(l, 5);
      g.couplings.push_back({ops::parse_real(l.tokens[1], l.number), ops::parse_index(l.tokens[2], l.number),
                             parse_axis(l.tokens[3], l.number), parse_axis(l.tokens[4], l.number)});
    } else {
      throw ParseError(l.number, k, "expected gadget, target or coupling");
    }
  }

  for (const auto& l : sections["verification"]) {
    const auto& k = l.tokens[0];
    if (k == "note") {
      std::string note;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) note += (i > 1 ? " " : "") + l.tokens[i];
      p.verification.note = note;
      continue;
    }
    expect_tokens(l, 2);
    if (k == "status") {
      try {
        p.verification.status = verification_status_from_name(l.tokens[1]);
      } catch (const ValidationError& e) {
        throw ParseError(l.number, l.tokens[1], e.what());
      }
    } else if (k == "measured") {
      p.verification.measured = ops::parse_real(l.tokens[1], l.number);
    } else if (k == "tolerance_factor") {
      p.verification.tolerance_factor = ops::parse_real(l.tokens[1], l.number);
    } else {
      throw ParseError(l.number, k, "unknown verification key");
    }
  }
  return p;
}

}  // namespace hred::gadget
