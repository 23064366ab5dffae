#include "polynorm/normdecomp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "polynorm/algebra.hpp"
#include "polynorm/error.hpp"

namespace polynorm {
namespace {

NormDecomposition decompose_symmetric(const Polytope& p) {
  // A symmetric point is the origin, which is its own decomposition.
  if (p.is_point()) return {p, p, p};

  StretchData stretched = stretch(p);
  const NormDecomposition lower = decompose_symmetric(stretched.slice);
  const Polytope upper = nonnegative_half(stretched.y, stretched.slice);

  // Y + S = Y+ + mirror(Y+) and S + q' + mirror(q') = r' + mirror(r') give
  // P + (dZ + r') + mirror(dZ + r') = (Y+ + q') + mirror(Y+ + q').
  Polytope q = vertical_segment(p.dim(), stretched.d) + embed_at_zero(lower.r);
  Polytope r = upper + embed_at_zero(lower.q);
  if (!verify_norm_identity(p, q, r)) {
    throw Error(ErrorCode::IdentityCheckFailed,
                "norm identity failed for " + p.to_string());
  }
  return {p, std::move(q), std::move(r)};
}

// Candidate filter: for every probe direction c, the width of Q along c must
// equal max(c . x) over P, because P = Q + mirror(Q) is symmetric.
struct WidthProbe {
  LatticePoint direction;
  Integer target;
};

std::vector<WidthProbe> width_probes(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<WidthProbe> probes;
  std::vector<long> digits(n, -1);
  // Directions in {-1,0,1}^n up to sign: first nonzero entry positive.
  while (n > 0) {
    auto first = std::find_if(digits.begin(), digits.end(), [](long d) { return d != 0; });
    if (first != digits.end() && *first > 0) {
      std::vector<Integer> c(digits.begin(), digits.end());
      LatticePoint dir(std::move(c));
      Integer best = dot(p.vertices().front(), dir);
      for (const auto& v : p.vertices()) best = std::max(best, Integer(dot(v, dir)));
      probes.push_back({std::move(dir), std::move(best)});
    }
    std::size_t i = 0;
    while (i < n && digits[i] == 1) digits[i++] = -1;
    if (i == n) break;
    ++digits[i];
  }
  return probes;
}

class NormSearch {
 public:
  NormSearch(const Polytope& p, std::vector<LatticePoint> candidates)
      : p_(p), candidates_(std::move(candidates)), probes_(width_probes(p)) {
    projections_.resize(probes_.size());
    for (std::size_t k = 0; k < probes_.size(); ++k) {
      for (const auto& z : candidates_) projections_[k].push_back(dot(z, probes_[k].direction));
    }
  }

  // Least witness using exactly `extra` points besides the origin.
  std::optional<Polytope> search_size(std::size_t extra, unsigned workers) {
    if (extra == 0) {
      std::vector<std::size_t> none;
      return check(none);
    }
    const std::size_t m = candidates_.size();
    if (extra > m) return std::nullopt;
    const std::size_t heads = m - extra + 1;  // possible first indices

    std::atomic<std::size_t> best_head{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<Polytope>> found(heads);
    auto run = [&](unsigned worker) {
      for (std::size_t head = worker; head < heads; head += workers) {
        if (head > best_head.load()) return;
        if (auto w = search_with_head(head, extra)) {
          found[head] = std::move(w);
          std::size_t current = best_head.load();
          while (head < current && !best_head.compare_exchange_weak(current, head)) {
          }
          return;
        }
      }
    };
    if (workers <= 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    const std::size_t head = best_head.load();
    if (head == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return std::move(found[head]);
  }

 private:
  std::optional<Polytope> search_with_head(std::size_t head, std::size_t extra) {
    const std::size_t m = candidates_.size();
    std::vector<std::size_t> idx(extra);
    idx[0] = head;
    for (std::size_t i = 1; i < extra; ++i) idx[i] = head + i;
    while (true) {
      if (auto w = check(idx)) return w;
      // Advance the tail (positions 1..extra-1) to the next combination.
      std::size_t i = extra;
      while (i > 1 && idx[i - 1] == m - extra + (i - 1)) --i;
      if (i == 1) return std::nullopt;
      ++idx[i - 1];
      for (std::size_t j = i; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::optional<Polytope> check(const std::vector<std::size_t>& idx) const {
    for (std::size_t k = 0; k < probes_.size(); ++k) {
      Integer lo = 0, hi = 0;  // the origin is always in Q
      for (std::size_t i : idx) {
        const Integer& value = projections_[k][i];
        if (value < lo) lo = value;
        if (value > hi) hi = value;
      }
      if (hi - lo != probes_[k].target) return std::nullopt;
    }
    std::vector<LatticePoint> points{LatticePoint::zero(p_.dim())};
    for (std::size_t i : idx) points.push_back(candidates_[i]);
    Polytope q = canonical_hull(points, p_.dim());
    if (equal(q + mirror(q), p_)) return q;
    return std::nullopt;
  }

  const Polytope& p_;
  std::vector<LatticePoint> candidates_;
  std::vector<WidthProbe> probes_;
  std::vector<std::vector<Integer>> projections_;
};

}  // namespace

StretchData stretch(const Polytope& p) {
  if (p.dim() == 0) throw_dimension_mismatch(1, 0);
  const std::size_t last = p.dim() - 1;
  Integer bound = 0;
  for (const auto& v : p.vertices()) {
    Integer a = abs(v[last]);
    if (a > bound) bound = a;
  }
  Integer d = bound + 1;
  const Polytope segment = vertical_segment(p.dim(), d);
  Polytope y = p + (segment + mirror(segment));
  return {std::move(d), std::move(y), project_drop_last(p)};
}

bool verify_norm_identity(const Polytope& p, const Polytope& q, const Polytope& r) {
  require_same_dim(p.dim(), q.dim());
  require_same_dim(p.dim(), r.dim());
  return equal(p + q + mirror(q), r + mirror(r));
}

NormDecomposition decompose(const Polytope& p) {
  if (!is_symmetric(p)) {
    throw Error(ErrorCode::NotSymmetric, "polytope is not symmetric: " + p.to_string());
  }
  return decompose_symmetric(p);
}

NormSearchResult search_integral_norm(const Polytope& p, const NormSearchOptions& options) {
  if (!is_symmetric(p)) {
    throw Error(ErrorCode::NotSymmetric, "polytope is not symmetric: " + p.to_string());
  }
  std::vector<LatticePoint> points = lattice_points(p);
  NormSearchResult result;
  result.lattice_point_count = points.size();
  if (points.size() > options.cap) {
    throw Error(ErrorCode::SearchCapExceeded,
                std::to_string(points.size()) + " lattice points exceed the cap of " +
                    std::to_string(options.cap));
  }
  std::erase_if(points, [](const LatticePoint& z) { return z.is_zero(); });

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  NormSearch search(p, std::move(points));
  const std::size_t m = result.lattice_point_count - 1;
  for (std::size_t extra = 0; extra <= m; ++extra) {
    if (auto w = search.search_size(extra, workers)) {
      result.witness = std::move(w);
      break;
    }
  }
  return result;
}

}  // namespace polynorm
