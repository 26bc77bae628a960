#pragma once

// Plan documents: a header block, then [source], [layers], [gadgets],
// [compiled] and [verification] sections. Reals are printed with 17
// significant digits so a parsed plan compares equal to the original.

#include <string>
#include <string_view>

#include "hred/gadget/compiler.hpp"

namespace hred::gadget {

std::string format_plan(const GadgetPlan& plan);
GadgetPlan parse_plan(std::string_view text);

}  // namespace hred::gadget
