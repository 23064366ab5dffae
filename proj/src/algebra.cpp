#include "polynorm/algebra.hpp"

#include <algorithm>

#include "polynorm/error.hpp"

namespace polynorm {

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  require_same_dim(p.dim(), q.dim());
  if (q.is_point()) return translate(p, q.vertices().front());
  if (p.is_point()) return translate(q, p.vertices().front());
  std::vector<LatticePoint> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return canonical_hull(sums, p.dim());
}

Polytope mirror(const Polytope& p) {
  std::vector<LatticePoint> negated;
  negated.reserve(p.size());
  // Negation reverses lexicographic order.
  for (auto it = p.vertices().rbegin(); it != p.vertices().rend(); ++it) {
    negated.push_back(-*it);
  }
  return detail_from_canonical(p.dim(), std::move(negated));
}

Polytope translate(const Polytope& p, const LatticePoint& t) {
  require_same_dim(p.dim(), t.dim());
  std::vector<LatticePoint> shifted;
  shifted.reserve(p.size());
  for (const auto& v : p.vertices()) shifted.push_back(v + t);
  return detail_from_canonical(p.dim(), std::move(shifted));
}

bool is_symmetric(const Polytope& p) { return equal(p, mirror(p)); }

std::optional<LatticePoint> symmetric_up_to_translation(const Polytope& p) {
  const Polytope m = mirror(p);
  LatticePoint t = lower_corner(m) - lower_corner(p);
  if (equal(m, translate(p, t))) return t;
  return std::nullopt;
}

Polytope vertical_segment(std::size_t dim, const Integer& length) {
  if (dim == 0) throw_dimension_mismatch(1, 0);
  if (length <= 0) {
    throw Error(ErrorCode::InvalidParameter,
                "segment length must be positive, got " + length.get_str());
  }
  std::vector<Integer> top(dim, Integer(0));
  top.back() = length;
  return canonical_hull({LatticePoint::zero(dim), LatticePoint(std::move(top))}, dim);
}

bool slice_matches(const Polytope& y, const Polytope& slice) {
  if (y.dim() == 0) throw_dimension_mismatch(1, 0);
  require_same_dim(y.dim() - 1, slice.dim());
  const std::size_t last = y.dim() - 1;

  for (const auto& s : slice.vertices()) {
    if (!contains(y, s.append(Integer(0)))) return false;
  }

  std::vector<const LatticePoint*> above, below;
  for (const auto& v : y.vertices()) {
    const int side = sgn(v[last]);
    if (side == 0) {
      if (!contains(slice, v.drop_last())) return false;
    } else {
      (side > 0 ? above : below).push_back(&v);
    }
  }
  for (const LatticePoint* a : above) {
    for (const LatticePoint* b : below) {
      // a + t (b - a) with t = a_n / (a_n - b_n).
      const Integer denom = (*a)[last] - (*b)[last];
      std::vector<Rational> crossing(last);
      for (std::size_t i = 0; i < last; ++i) {
        crossing[i] = Rational((*b)[i] * (*a)[last] - (*a)[i] * (*b)[last], denom);
        crossing[i].canonicalize();
      }
      if (!contains(slice, RationalPoint(std::move(crossing)))) return false;
    }
  }
  return true;
}

Polytope nonnegative_half(const Polytope& y, const Polytope& slice) {
  if (y.dim() == 0) throw_dimension_mismatch(1, 0);
  require_same_dim(y.dim() - 1, slice.dim());
#ifndef NDEBUG
  if (!slice_matches(y, slice)) {
    throw Error(ErrorCode::SliceMismatch,
                "slice " + slice.to_string() + " is not the cut of " + y.to_string());
  }
#endif
  const std::size_t last = y.dim() - 1;
  std::vector<LatticePoint> points;
  for (const auto& v : y.vertices()) {
    if (sgn(v[last]) >= 0) points.push_back(v);
  }
  for (const auto& s : slice.vertices()) points.push_back(s.append(Integer(0)));
  return canonical_hull(points, y.dim());
}

std::vector<Edge2D> edges_2d(const Polytope& p) {
  require_same_dim(2, p.dim());
  const auto& verts = p.vertices();
  std::vector<Edge2D> edges;
  if (verts.size() == 1) return edges;

  const LatticePoint& pivot = verts.front();
  std::vector<LatticePoint> ring(verts.begin() + 1, verts.end());
  // All vertices lie on one side of the lexicographically smallest one, and
  // no two are collinear with it, so the angular order is strict.
  std::sort(ring.begin(), ring.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    const LatticePoint da = a - pivot;
    const LatticePoint db = b - pivot;
    return sgn(da[0] * db[1] - da[1] * db[0]) > 0;
  });
  ring.insert(ring.begin(), pivot);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const LatticePoint& next = ring[(i + 1) % ring.size()];
    edges.push_back({ring[i], next - ring[i]});
  }
  return edges;
}

Integer lattice_length(const LatticePoint& v) {
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c);
  return g;
}

}  // namespace polynorm
