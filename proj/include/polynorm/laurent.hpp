#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

/// An element of the group ring Z[Z^n]: finitely many exponent vectors with
/// nonzero integer coefficients. The zero polynomial has no terms.
class LaurentPolynomial {
 public:
  using TermMap = std::map<LatticePoint, Integer>;

  explicit LaurentPolynomial(std::size_t dim) : dim_(dim) {}
  /// Drops zero coefficients; every exponent must have dimension dim.
  LaurentPolynomial(std::size_t dim, TermMap terms);

  static LaurentPolynomial constant(std::size_t dim, const Integer& c);
  static LaurentPolynomial monomial(const LatticePoint& exponent, const Integer& c);

  std::size_t dim() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^exponent (zero when absent).
  Integer coefficient(const LatticePoint& exponent) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::size_t dim_;
  TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial negate(const LaurentPolynomial& f);
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// The standard involution: every exponent is negated.
LaurentPolynomial conjugate(const LaurentPolynomial& f);

/// Convex hull of the support. Throws ZeroPolynomial for f = 0.
Polytope newton_polytope(const LaurentPolynomial& f);

/// Parses expressions such as "3*x^2*y^-1 - x" or "(1+x)*(1+y)".
///
/// Grammar: integers, variables from `variables`, `^` with an integer
/// exponent (negative only on monomials), explicit `*`, binary and unary
/// `+`/`-`, and parentheses. Whitespace is ignored. Throws SyntaxError
/// (with position) and UnknownVariable.
LaurentPolynomial parse_laurent(std::string_view text, const std::vector<std::string>& variables);

/// Inverse of parse_laurent; terms in lexicographic exponent order.
std::string to_string(const LaurentPolynomial& f, const std::vector<std::string>& variables);

}  // namespace polynorm
