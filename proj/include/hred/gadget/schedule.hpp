#pragma once

// Energy scales for a stack of gadget layers.
//
// Layer i (1-based) with gadget count n_i and effective-coupling factor
// kappa_i obeys
//   (1) Delta_i >= s * lambda_i
//   (2) lambda_i >= s * Delta_{i-1}            (Delta_0 = 1)
//   (3) lambda_{i-1} = kappa_i lambda_i^2 / Delta_i   (lambda_0 = 1)
// with safety factor s, and its gadgets contribute n_i lambda_i^3 / Delta_i^2
// to the error budget. Each layer receives an equal share delta/L of the
// precision and takes the smallest lambda_i meeting (1), (2) and its share.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace hred::gadget {

enum class LayerKind { Decomposition, Coupling, Pair, Heisenberg };

const char* layer_kind_name(LayerKind k);
LayerKind layer_kind_from_name(const std::string& s);

struct LayerSpec {
  LayerKind kind = LayerKind::Coupling;
  std::size_t gadget_count = 0;
  double kappa = 1;
};

struct LayerScale {
  double lambda = 0;
  double delta = 0;
  double error = 0;  // n_i lambda_i^3 / Delta_i^2

  friend bool operator==(const LayerScale&, const LayerScale&) = default;
};

struct ScheduleOptions {
  double safety_factor = 10;
  double max_scale = 1e150;
};

struct Schedule {
  std::vector<LayerScale> layers;
  double total_error_budget = 0;
};

inline constexpr double kNoPrecision = std::numeric_limits<double>::infinity();

// Throws ValidationError for delta <= 0 and InfeasibleError (naming the binding
// rule) when a scale leaves the finite range.
Schedule schedule_scales(const std::vector<LayerSpec>& layers, double delta, const ScheduleOptions& opt = {});

}  // namespace hred::gadget
