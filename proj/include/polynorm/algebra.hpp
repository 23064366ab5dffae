#pragma once

#include <optional>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

/// P + Q = { p + q }. The origin polytope is the identity.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

inline Polytope operator+(const Polytope& p, const Polytope& q) { return minkowski_sum(p, q); }

/// The mirror image { -x : x in P }.
Polytope mirror(const Polytope& p);

Polytope translate(const Polytope& p, const LatticePoint& t);

bool is_symmetric(const Polytope& p);

/// Some t with mirror(P) = P + t, or nullopt. The only candidate is the
/// difference of the lower corners, so this is a single equality test.
std::optional<LatticePoint> symmetric_up_to_translation(const Polytope& p);

/// The segment from the origin to (0, ..., 0, length) in R^dim.
Polytope vertical_segment(std::size_t dim, const Integer& length);

/// Exact test that `slice`, read as a subset of R^(n-1), is Y cut by the
/// hyperplane x_n = 0. The cut is the hull of the vertices of Y on the
/// hyperplane together with the crossing points of vertex pairs strictly on
/// opposite sides, so checking both inclusions against those points decides
/// the question.
bool slice_matches(const Polytope& y, const Polytope& slice);

/// Y intersected with x_n >= 0, given the integral slice Y cut by x_n = 0.
/// The slice is trusted in release builds and checked with slice_matches in
/// debug builds (SliceMismatch).
Polytope nonnegative_half(const Polytope& y, const Polytope& slice);

struct Edge2D {
  LatticePoint start;
  LatticePoint direction;

  friend bool operator==(const Edge2D&, const Edge2D&) = default;
};

/// Boundary of a planar polytope walked counterclockwise from its
/// lexicographically smallest vertex. Empty for a point; a segment gives its
/// two opposite directions.
std::vector<Edge2D> edges_2d(const Polytope& p);

/// Number of lattice steps along v: the gcd of its coordinates.
Integer lattice_length(const LatticePoint& v);

}  // namespace polynorm
