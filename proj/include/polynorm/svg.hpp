#pragma once

#include <string>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

struct SvgLayer {
  std::string label;
  Polytope polytope;
};

/// Draws planar polytopes on a shared integer grid, one colour per layer,
/// with a legend. Throws DimensionMismatch for non-planar input.
std::string render_svg(const std::vector<SvgLayer>& layers);

}  // namespace polynorm
