#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polynorm/lattice.hpp"

namespace polynorm {

/// Finds nonnegative weights w with sum(w) = 1 and sum(w_i * g_i) = target,
/// or nullopt if none exist. Solved exactly by a phase-one simplex on the
/// convex-combination system using Bland's anticycling rule; no floating
/// point is involved. An empty generator list is never feasible.
std::optional<std::vector<Rational>> convex_weights(
    std::span<const LatticePoint> generators, const RationalPoint& target);

inline bool in_convex_hull(std::span<const LatticePoint> generators,
                           const RationalPoint& target) {
  return convex_weights(generators, target).has_value();
}

}  // namespace polynorm
