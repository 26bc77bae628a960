#pragma once

// Hubbard model text format:
//
//   hubbard 1
//   sites 3
//   t 1
//   U 100
//   edge 0 1          # uses the uniform t
//   edge 1 2 0.5      # per-edge hopping
//   field 0 bx by bz  # optional, unlisted sites get zero field
//
// The fermionic operator itself is rebuilt with build_hubbard.

#include <string>
#include <string_view>

#include "hred/lattice/hubbard.hpp"

namespace hred::lattice {

std::string format_hubbard(const HubbardModel& m);
HubbardModel parse_hubbard(std::string_view text);

}  // namespace hred::lattice
