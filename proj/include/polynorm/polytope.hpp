#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polynorm/lattice.hpp"

namespace polynorm {

/// An integral polytope in R^n held by its canonical vertex list: sorted
/// lexicographically, duplicate free, and every vertex extreme. Instances
/// are only produced by canonical_hull, so two polytopes are equal exactly
/// when their vertex lists are.
class Polytope {
 public:
  /// The point polytope {p}.
  static Polytope point(LatticePoint p);
  /// The monoid identity {0} of R^dim.
  static Polytope origin(std::size_t dim) { return point(LatticePoint::zero(dim)); }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool is_point() const noexcept { return vertices_.size() == 1; }

  friend bool operator==(const Polytope& a, const Polytope& b) = default;

  std::string to_string() const;

 private:
  Polytope(std::size_t dim, std::vector<LatticePoint> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  friend Polytope canonical_hull(std::span<const LatticePoint> points, std::size_t dim);
  friend Polytope detail_from_canonical(std::size_t dim, std::vector<LatticePoint> vertices);

  std::size_t dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

/// Canonical vertex representation of conv(points). Throws EmptyPolytope for
/// an empty list and DimensionMismatch if any point is not of dimension dim.
Polytope canonical_hull(std::span<const LatticePoint> points, std::size_t dim);

inline Polytope canonical_hull(std::initializer_list<LatticePoint> points, std::size_t dim) {
  return canonical_hull(std::span<const LatticePoint>(points.begin(), points.size()), dim);
}

/// Exact membership of a rational point.
bool contains(const Polytope& p, const RationalPoint& x);
bool contains(const Polytope& p, const LatticePoint& x);

/// Every lattice point of p, in lexicographic order.
std::vector<LatticePoint> lattice_points(const Polytope& p);

/// Componentwise bounds of the vertex set.
LatticePoint lower_corner(const Polytope& p);
LatticePoint upper_corner(const Polytope& p);

/// Polytope equality; throws DimensionMismatch for different ambient spaces.
bool equal(const Polytope& a, const Polytope& b);

/// Image under the projection forgetting the last coordinate.
Polytope project_drop_last(const Polytope& p);

/// Image under x -> (x, 0).
Polytope embed_at_zero(const Polytope& p);

/// Wraps a vertex list the caller guarantees is already canonical (for
/// example the image of a canonical list under a map that preserves order
/// and extremality). Not checked.
Polytope detail_from_canonical(std::size_t dim, std::vector<LatticePoint> vertices);

namespace detail {

// Hull through exact LP elimination only, with no low-dimensional shortcut.
// Exposed so tests can cross-check the planar fast path.
std::vector<LatticePoint> extreme_points_by_elimination(std::vector<LatticePoint> points);

}  // namespace detail

}  // namespace polynorm
