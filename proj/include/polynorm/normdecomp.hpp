#pragma once

#include <cstddef>
#include <optional>

#include "polynorm/polytope.hpp"

namespace polynorm {

/// Witness for P + Q + mirror(Q) = R + mirror(R).
struct NormDecomposition {
  Polytope p;
  Polytope q;
  Polytope r;
};

/// Vertical stretching of P: Y = P + dZ + mirror(dZ) where dZ is the segment
/// to (0, ..., 0, d) and d exceeds every |last coordinate| of P. Then Y cut
/// by x_n = 0 is the projection of P, which is integral.
struct StretchData {
  Integer d;
  Polytope y;
  Polytope slice;
};

StretchData stretch(const Polytope& p);

/// Exact check of P + Q + mirror(Q) = R + mirror(R).
bool verify_norm_identity(const Polytope& p, const Polytope& q, const Polytope& r);

/// Writes a symmetric integral polytope as a norm difference by induction on
/// the dimension, cutting the stretched polytope along x_n = 0 at each level.
/// Every level is verified exactly; a failed check raises IdentityCheckFailed.
/// Throws NotSymmetric if P is not symmetric.
NormDecomposition decompose(const Polytope& p);

inline constexpr std::size_t kDefaultSearchCap = 20;

struct NormSearchOptions {
  /// Upper bound on the number of lattice points of P.
  std::size_t cap = kDefaultSearchCap;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct NormSearchResult {
  std::optional<Polytope> witness;
  std::size_t lattice_point_count = 0;
};

/// Exhaustive search for an integral Q with Q + mirror(Q) = P.
///
/// Q may be translated so that one of its vertices is the origin, and then
/// Q lies inside P, so it is enough to try hulls of subsets of the lattice
/// points of P that contain the origin. Subsets are visited by size, then
/// lexicographically over the sorted lattice point list; the first witness
/// found in that order is returned no matter how the work is split between
/// threads. Throws SearchCapExceeded past `cap` lattice points and
/// NotSymmetric for non-symmetric input.
NormSearchResult search_integral_norm(const Polytope& p, const NormSearchOptions& options = {});

inline std::optional<Polytope> is_integral_norm(const Polytope& p,
                                                std::size_t cap = kDefaultSearchCap) {
  return search_integral_norm(p, {.cap = cap}).witness;
}

}  // namespace polynorm
