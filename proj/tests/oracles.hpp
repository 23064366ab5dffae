#pragma once

// Test-only reference computations. Nothing here calls into the library's
// hull, membership or Minkowski code, so they can check it independently.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "polynorm/lattice.hpp"

namespace polynorm::oracle {

// Solves M y = b exactly; nullopt when M is singular. M is square.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

// x is in conv(V) iff it is in conv of some affinely independent subset of V
// (Caratheodory). Each subset of size k is tested by solving the k x k normal
// system restricted to k rows of the barycentric equations.
inline bool caratheodory_contains(const std::vector<LatticePoint>& v, const RationalPoint& x) {
  const std::size_t n = x.dim();
  const std::size_t m = v.size();
  for (std::size_t k = 1; k <= std::min(m, n + 1); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      // Rows: n coordinate equations and the affine equation. Try every
      // choice of k rows that includes the affine row; accept if the full
      // system is satisfied with nonnegative weights.
      std::vector<std::size_t> rows(k - 1);
      for (std::size_t i = 0; i + 1 < k; ++i) rows[i] = i;
      while (true) {
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        std::vector<Rational> b(k);
        for (std::size_t j = 0; j < k; ++j) a[0][j] = 1;
        b[0] = 1;
        for (std::size_t r = 0; r + 1 < k; ++r) {
          for (std::size_t j = 0; j < k; ++j) a[r + 1][j] = Rational(v[idx[j]][rows[r]]);
          b[r + 1] = x[rows[r]];
        }
        if (auto w = solve(a, b)) {
          bool ok = std::all_of(w->begin(), w->end(), [](const Rational& t) { return t >= 0; });
          for (std::size_t c = 0; ok && c < n; ++c) {
            Rational s = 0;
            for (std::size_t j = 0; j < k; ++j) s += (*w)[j] * Rational(v[idx[j]][c]);
            ok = s == x[c];
          }
          if (ok) return true;
        }
        std::size_t i = k - 1;
        while (i > 0 && rows[i - 1] == n - (k - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j + 1 < k; ++j) rows[j] = rows[j - 1] + 1;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

inline bool caratheodory_contains(const std::vector<LatticePoint>& v, const LatticePoint& x) {
  return caratheodory_contains(v, RationalPoint(x));
}

// Lattice points of conv(V) by scanning the bounding box.
inline std::set<LatticePoint> lattice_points(const std::vector<LatticePoint>& v) {
  const std::size_t n = v.front().dim();
  std::vector<Integer> lo(v.front().coords().begin(), v.front().coords().end());
  std::vector<Integer> hi = lo;
  for (const auto& p : v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  }
  std::set<LatticePoint> out;
  std::vector<Integer> cur = lo;
  while (true) {
    LatticePoint z(cur);
    if (caratheodory_contains(v, z)) out.insert(z);
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) cur[i] = lo[i], ++i;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

// All pairwise sums: conv of these is the Minkowski sum.
inline std::vector<LatticePoint> pairwise_sums(const std::vector<LatticePoint>& a,
                                               const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> out;
  for (const auto& p : a) {
    for (const auto& q : b) out.push_back(p + q);
  }
  return out;
}

inline std::vector<LatticePoint> negated(const std::vector<LatticePoint>& a) {
  std::vector<LatticePoint> out;
  for (const auto& p : a) out.push_back(-p);
  return out;
}

// Vertices of conv(V): the points not in the hull of the others.
inline std::set<LatticePoint> extreme_points(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::set<LatticePoint> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<LatticePoint> others;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i) others.push_back(v[j]);
    }
    if (others.empty() || !caratheodory_contains(others, v[i])) out.insert(v[i]);
  }
  return out;
}

}  // namespace polynorm::oracle
