#pragma once

#include "polynorm/polytope.hpp"

namespace polynorm {

/// The class of the formal difference plus - minus. No reduced form is kept;
/// compare with element_eq.
class GrothendieckElement {
 public:
  GrothendieckElement(Polytope plus, Polytope minus);

  /// The image of P under the embedding P -> (P, 0).
  static GrothendieckElement embed(Polytope p);
  static GrothendieckElement zero(std::size_t dim);

  const Polytope& plus() const noexcept { return plus_; }
  const Polytope& minus() const noexcept { return minus_; }
  std::size_t dim() const noexcept { return plus_.dim(); }

 private:
  Polytope plus_;
  Polytope minus_;
};

inline GrothendieckElement element(Polytope plus, Polytope minus) {
  return GrothendieckElement(std::move(plus), std::move(minus));
}

/// (P, Q) ~ (P', Q')  iff  P + Q' = P' + Q.
bool element_eq(const GrothendieckElement& x, const GrothendieckElement& y);

GrothendieckElement add(const GrothendieckElement& x, const GrothendieckElement& y);
GrothendieckElement negate(const GrothendieckElement& x);
GrothendieckElement mirror_element(const GrothendieckElement& x);
bool is_symmetric_element(const GrothendieckElement& x);

/// Asserts X = (u + mirror(u)) - (v + mirror(v)).
struct NormDifferenceCertificate {
  Polytope u;
  Polytope v;
};

/// X.plus + v + mirror(v) = X.minus + u + mirror(u), checked exactly.
bool verify_certificate(const GrothendieckElement& x, const NormDifferenceCertificate& cert);

/// Writes a mirror-invariant element as a difference of two integral norms.
///
/// With X = A - B, the polytope S = A + mirror(B) is symmetric, and a norm
/// decomposition S + q + mirror(q) = r + mirror(r) yields u = r and
/// v = q + B. The certificate is verified before it is returned.
NormDifferenceCertificate norm_difference(const GrothendieckElement& x);

}  // namespace polynorm
