#include "hred/gadget/schedule.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hred/errors.hpp"

namespace hred::gadget {

const char* layer_kind_name(LayerKind k) {
  switch (k) {
    case LayerKind::Decomposition: return "decomposition";
    case LayerKind::Coupling: return "coupling";
    case LayerKind::Pair: return "pair";
    case LayerKind::Heisenberg: return "heisenberg";
  }
  return "?";
}

LayerKind layer_kind_from_name(const std::string& s) {
  for (auto k : {LayerKind::Decomposition, LayerKind::Coupling, LayerKind::Pair, LayerKind::Heisenberg})
    if (s == layer_kind_name(k)) return k;
  throw ValidationError(fmt::format("unknown layer kind '{}'", s));
}

Schedule schedule_scales(const std::vector<LayerSpec>& layers, double delta, const ScheduleOptions& opt) {
  if (!(delta > 0)) throw ValidationError(fmt::format("precision must be positive, got {}", delta));
  if (!(opt.safety_factor >= 1)) throw ValidationError("safety factor must be at least 1");
  Schedule out;
  if (layers.empty()) return out;
  const double share = delta / static_cast<double>(layers.size());
  double lambda_prev = 1, delta_prev = 1;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& spec = layers[i];
    if (!(spec.kappa > 0)) throw ValidationError("layer kappa must be positive");
    const double n = static_cast<double>(std::max<std::size_t>(spec.gadget_count, 1));
    const double k = spec.kappa;
    // smallest lambda for each rule
    const double by_rule2 = opt.safety_factor * delta_prev;
    const double by_rule1 = opt.safety_factor * lambda_prev / k;
    const double by_precision = std::isinf(share) ? 0.0 : n * lambda_prev * lambda_prev / (k * k * share);
    const double lambda = std::max({by_rule1, by_rule2, by_precision});
    const double big = k * lambda * lambda / lambda_prev;
    if (!std::isfinite(big) || big > opt.max_scale || lambda > opt.max_scale) {
      std::string rule = "rule 1 (Delta_i >= s lambda_i)";
      if (by_rule2 >= by_rule1 && by_rule2 >= by_precision) rule = "rule 2 (lambda_i >= s Delta_{i-1})";
      if (by_precision >= by_rule1 && by_precision >= by_rule2) rule = "precision (n lambda^3/Delta^2 <= delta/L)";
      throw InfeasibleError(rule, fmt::format("layer {} scale exceeds {:.3g}; binding constraint: {}", i + 1,
                                              opt.max_scale, rule));
    }
    const double err = n * lambda * lambda * lambda / (big * big);
    out.layers.push_back({lambda, big, err});
    out.total_error_budget += err;
    lambda_prev = lambda;
    delta_prev = big;
  }
  return out;
}

}  // namespace hred::gadget
