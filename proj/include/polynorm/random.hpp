#pragma once

#include <random>

#include "polynorm/laurent.hpp"
#include "polynorm/polytope.hpp"

namespace polynorm::random {

using Engine = std::mt19937_64;

/// Uniform point of [-radius, radius]^dim.
LatticePoint point(Engine& rng, std::size_t dim, long radius);

/// Hull of 1..max_points uniform points of [-radius, radius]^dim.
Polytope polytope(Engine& rng, std::size_t dim, std::size_t max_points, long radius);

/// Hull of S union -S for a random S of 1..max_points points.
Polytope symmetric_polytope(Engine& rng, std::size_t dim, std::size_t max_points, long radius);

/// Nonzero polynomial with 1..max_terms terms, exponents in
/// [-radius, radius] and coefficients in [-9, 9] \ {0}.
LaurentPolynomial laurent(Engine& rng, std::size_t dim, std::size_t max_terms, long radius);

}  // namespace polynorm::random
