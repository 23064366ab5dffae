#include "polynorm/random.hpp"

namespace polynorm::random {

LatticePoint point(Engine& rng, std::size_t dim, long radius) {
  std::uniform_int_distribution<long> coord(-radius, radius);
  std::vector<Integer> c;
  c.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) c.emplace_back(coord(rng));
  return LatticePoint(std::move(c));
}

Polytope polytope(Engine& rng, std::size_t dim, std::size_t max_points, long radius) {
  std::uniform_int_distribution<std::size_t> count(1, max_points);
  std::vector<LatticePoint> pts;
  for (std::size_t i = count(rng); i > 0; --i) pts.push_back(point(rng, dim, radius));
  return canonical_hull(pts, dim);
}

Polytope symmetric_polytope(Engine& rng, std::size_t dim, std::size_t max_points, long radius) {
  std::uniform_int_distribution<std::size_t> count(1, max_points);
  std::vector<LatticePoint> pts;
  for (std::size_t i = count(rng); i > 0; --i) {
    pts.push_back(point(rng, dim, radius));
    pts.push_back(-pts.back());
  }
  return canonical_hull(pts, dim);
}

LaurentPolynomial laurent(Engine& rng, std::size_t dim, std::size_t max_terms, long radius) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<long> coef(1, 9);
  std::bernoulli_distribution sign;
  LaurentPolynomial::TermMap terms;
  for (std::size_t i = count(rng); i > 0; --i) {
    long c = coef(rng);
    terms[point(rng, dim, radius)] = sign(rng) ? -c : c;
  }
  return LaurentPolynomial(dim, std::move(terms));
}

}  // namespace polynorm::random
