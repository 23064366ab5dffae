#include "polynorm/polytope.hpp"

#include <algorithm>

#include "polynorm/error.hpp"
#include "polynorm/exact_lp.hpp"

namespace polynorm {
namespace detail {
std::vector<LatticePoint> extreme_points_by_elimination(std::vector<LatticePoint> points);
}  // namespace detail

namespace {

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; collinear boundary points are dropped.
std::vector<LatticePoint> planar_hull(const std::vector<LatticePoint>& pts) {
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> hull;
  hull.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 && sgn(cross(hull[hull.size() - 2], hull.back(), p)) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower && sgn(cross(hull[hull.size() - 2], hull.back(), *it)) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();
  std::sort(hull.begin(), hull.end());
  return hull;
}

Integer orient3d(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                 const LatticePoint& d) {
  const Integer bx = b[0] - a[0], by = b[1] - a[1], bz = b[2] - a[2];
  const Integer cx = c[0] - a[0], cy = c[1] - a[1], cz = c[2] - a[2];
  const Integer dx = d[0] - a[0], dy = d[1] - a[1], dz = d[2] - a[2];
  return bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx);
}

// Coordinates (i, j) of a 3-vector.
LatticePoint pick(const LatticePoint& p, std::size_t i, std::size_t j) {
  return LatticePoint(std::vector<Integer>{p[i], p[j]});
}

// Hull of a coplanar set in R^3: project to a coordinate plane on which the
// supporting plane maps bijectively, take the planar hull, and lift back.
std::vector<LatticePoint> flat_hull(const std::vector<LatticePoint>& pts, const LatticePoint& a,
                                    const LatticePoint& b, const LatticePoint& c) {
  const LatticePoint u = b - a;
  const LatticePoint v = c - a;
  const Integer normal[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                             u[0] * v[1] - u[1] * v[0]};
  const std::size_t drop = sgn(normal[2]) != 0 ? 2 : (sgn(normal[1]) != 0 ? 1 : 0);
  const std::size_t i = drop == 0 ? 1 : 0;
  const std::size_t j = drop == 2 ? 1 : 2;
  std::vector<LatticePoint> projected;
  projected.reserve(pts.size());
  for (const auto& p : pts) projected.push_back(pick(p, i, j));
  std::sort(projected.begin(), projected.end());
  const std::vector<LatticePoint> ring = planar_hull(projected);
  std::vector<LatticePoint> out;
  for (const auto& p : pts) {
    if (std::binary_search(ring.begin(), ring.end(), pick(p, i, j))) out.push_back(p);
  }
  return out;
}

// Incremental hull in R^3 with exact orientation tests. A point is added
// only when it is strictly outside some facet, so the surface vertices are
// a superset of the true vertices; points left in the relative interior of
// a flat facet or edge are removed at the end.
std::vector<LatticePoint> spatial_hull(const std::vector<LatticePoint>& pts) {
  const std::size_t count = pts.size();
  std::size_t i1 = 1;
  std::size_t i2 = count;
  for (std::size_t k = 2; k < count && i2 == count; ++k) {
    const LatticePoint u = pts[i1] - pts[0];
    const LatticePoint w = pts[k] - pts[0];
    if (sgn(u[1] * w[2] - u[2] * w[1]) != 0 || sgn(u[2] * w[0] - u[0] * w[2]) != 0 ||
        sgn(u[0] * w[1] - u[1] * w[0]) != 0) {
      i2 = k;
    }
  }
  if (i2 == count) return {pts.front(), pts.back()};  // collinear, sorted input
  std::size_t i3 = count;
  for (std::size_t k = 0; k < count && i3 == count; ++k) {
    if (sgn(orient3d(pts[0], pts[i1], pts[i2], pts[k])) != 0) i3 = k;
  }
  if (i3 == count) return flat_hull(pts, pts[0], pts[i1], pts[i2]);

  struct Face {
    std::size_t a, b, c;
  };
  std::vector<Face> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t inside) {
    if (sgn(orient3d(pts[a], pts[b], pts[c], pts[inside])) > 0) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  add_face(0, i1, i2, i3);
  add_face(0, i1, i3, i2);
  add_face(0, i2, i3, i1);
  add_face(i1, i2, i3, 0);

  std::vector<char> used(count, 0);
  used[0] = used[i1] = used[i2] = used[i3] = 1;
  std::vector<char> visible;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < count; ++p) {
    if (used[p]) continue;
    visible.assign(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (sgn(orient3d(pts[faces[f].a], pts[faces[f].b], pts[faces[f].c], pts[p])) > 0) {
        visible[f] = any = 1;
      }
    }
    if (!any) continue;
    edges.clear();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      edges.emplace_back(faces[f].a, faces[f].b);
      edges.emplace_back(faces[f].b, faces[f].c);
      edges.emplace_back(faces[f].c, faces[f].a);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Face> next;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) next.push_back(faces[f]);
    }
    // Horizon: directed edges of visible faces whose reverse is not visible.
    for (const auto& [a, b] : edges) {
      if (!std::binary_search(edges.begin(), edges.end(), std::make_pair(b, a))) {
        next.push_back({a, b, p});
      }
    }
    faces = std::move(next);
    used[p] = 1;
  }

  // On a convex surface a point is extreme exactly when it is not in the
  // hull of its neighbours.
  std::vector<std::vector<std::size_t>> links(count);
  for (const auto& f : faces) {
    for (auto [v, w] : {std::pair{f.a, f.b}, std::pair{f.b, f.c}, std::pair{f.c, f.a}}) {
      links[v].push_back(w);
      links[w].push_back(v);
    }
  }
  std::vector<LatticePoint> out;
  std::vector<LatticePoint> neighbours;
  for (std::size_t v = 0; v < count; ++v) {
    if (links[v].empty()) continue;
    std::sort(links[v].begin(), links[v].end());
    links[v].erase(std::unique(links[v].begin(), links[v].end()), links[v].end());
    neighbours.clear();
    for (std::size_t w : links[v]) neighbours.push_back(pts[w]);
    if (!in_convex_hull(neighbours, RationalPoint(pts[v]))) out.push_back(pts[v]);
  }
  return out;
}

// Directions used to certify vertices cheaply: a point that is the unique
// maximizer of some linear functional is extreme.
std::vector<LatticePoint> probe_directions(std::size_t dim) {
  std::vector<LatticePoint> out;
  long radius = dim <= 3 ? 3 : (dim <= 6 ? 1 : 0);
  if (radius == 0) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Integer> e(dim, Integer(0));
      e[i] = 1;
      out.emplace_back(e);
      out.push_back(-out.back());
    }
    return out;
  }
  std::vector<long> digits(dim, -radius);
  while (true) {
    if (std::any_of(digits.begin(), digits.end(), [](long d) { return d != 0; })) {
      std::vector<Integer> c;
      c.reserve(dim);
      for (long d : digits) c.emplace_back(d);
      out.emplace_back(std::move(c));
    }
    std::size_t i = 0;
    while (i < dim && digits[i] == radius) digits[i++] = -radius;
    if (i == dim) break;
    ++digits[i];
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<LatticePoint> extreme_points_by_elimination(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t count = points.size();
  if (count <= 2) return points;

  std::vector<char> certified(count, 0);
  for (const auto& c : probe_directions(points.front().dim())) {
    std::size_t best = 0;
    Integer best_value = dot(points[0], c);
    bool unique = true;
    for (std::size_t i = 1; i < count; ++i) {
      Integer value = dot(points[i], c);
      const int order = cmp(value, best_value);
      if (order > 0) {
        best = i;
        best_value = std::move(value);
        unique = true;
      } else if (order == 0) {
        unique = false;
      }
    }
    if (unique) certified[best] = 1;
  }

  // Pass one: anything inside the hull of the certified vertices goes.
  // Removing those does not change the hull, so pass two only needs to look
  // at the certified points and the survivors.
  std::vector<LatticePoint> certified_points;
  for (std::size_t i = 0; i < count; ++i) {
    if (certified[i]) certified_points.push_back(points[i]);
  }
  std::vector<char> alive(count, 1);
  for (std::size_t i = 0; i < count; ++i) {
    if (!certified[i] && in_convex_hull(certified_points, RationalPoint(points[i]))) alive[i] = 0;
  }
  std::vector<LatticePoint> others;
  for (std::size_t i = 0; i < count; ++i) {
    if (certified[i] || !alive[i]) continue;
    others.clear();
    for (std::size_t j = 0; j < count; ++j) {
      if (j != i && alive[j]) others.push_back(points[j]);
    }
    if (in_convex_hull(others, RationalPoint(points[i]))) alive[i] = 0;
  }

  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (alive[i]) out.push_back(std::move(points[i]));
  }
  return out;
}

}  // namespace detail

Polytope detail_from_canonical(std::size_t dim, std::vector<LatticePoint> vertices) {
  return Polytope(dim, std::move(vertices));
}

Polytope Polytope::point(LatticePoint p) {
  const std::size_t dim = p.dim();
  return Polytope(dim, {std::move(p)});
}

std::string Polytope::to_string() const {
  std::string s = "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ", ";
    s += vertices_[i].to_string();
  }
  return s + "}";
}

Polytope canonical_hull(std::span<const LatticePoint> points, std::size_t dim) {
  if (points.empty()) throw Error(ErrorCode::EmptyPolytope, "a polytope needs at least one point");
  for (const auto& p : points) require_same_dim(dim, p.dim());

  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() <= 2) return Polytope(dim, std::move(pts));
  switch (dim) {
    case 1:
      return Polytope(dim, {pts.front(), pts.back()});
    case 2:
      return Polytope(dim, planar_hull(pts));
    case 3:
      return Polytope(dim, spatial_hull(pts));
    default:
      return Polytope(dim, detail::extreme_points_by_elimination(std::move(pts)));
  }
}

LatticePoint lower_corner(const Polytope& p) {
  std::vector<Integer> lo(p.vertices().front().coords().begin(),
                          p.vertices().front().coords().end());
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
    }
  }
  return LatticePoint(std::move(lo));
}

LatticePoint upper_corner(const Polytope& p) {
  std::vector<Integer> hi(p.vertices().front().coords().begin(),
                          p.vertices().front().coords().end());
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  return LatticePoint(std::move(hi));
}

bool contains(const Polytope& p, const RationalPoint& x) {
  require_same_dim(p.dim(), x.dim());
  const LatticePoint lo = lower_corner(p);
  const LatticePoint hi = upper_corner(p);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return in_convex_hull(p.vertices(), x);
}

bool contains(const Polytope& p, const LatticePoint& x) {
  require_same_dim(p.dim(), x.dim());
  if (std::binary_search(p.vertices().begin(), p.vertices().end(), x)) return true;
  return contains(p, RationalPoint(x));
}

std::vector<LatticePoint> lattice_points(const Polytope& p) {
  if (p.is_point()) return p.vertices();
  const LatticePoint lo = lower_corner(p);
  const LatticePoint hi = upper_corner(p);
  const std::size_t n = p.dim();

  std::vector<LatticePoint> out;
  std::vector<Integer> cursor(lo.coords().begin(), lo.coords().end());
  // Odometer with the last coordinate fastest, which yields lexicographic order.
  while (true) {
    LatticePoint z(cursor);
    if (contains(p, z)) out.push_back(std::move(z));
    std::size_t i = n;
    while (i > 0 && cursor[i - 1] == hi[i - 1]) {
      cursor[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++cursor[i - 1];
  }
  return out;
}

bool equal(const Polytope& a, const Polytope& b) {
  require_same_dim(a.dim(), b.dim());
  return a.vertices() == b.vertices();
}

Polytope project_drop_last(const Polytope& p) {
  if (p.dim() == 0) throw_dimension_mismatch(1, 0);
  std::vector<LatticePoint> projected;
  projected.reserve(p.size());
  for (const auto& v : p.vertices()) projected.push_back(v.drop_last());
  return canonical_hull(projected, p.dim() - 1);
}

Polytope embed_at_zero(const Polytope& p) {
  std::vector<LatticePoint> lifted;
  lifted.reserve(p.size());
  for (const auto& v : p.vertices()) lifted.push_back(v.append(Integer(0)));
  return detail_from_canonical(p.dim() + 1, std::move(lifted));
}

}  // namespace polynorm
