#include "polynorm/grothendieck.hpp"

#include "polynorm/algebra.hpp"
#include "polynorm/error.hpp"
#include "polynorm/normdecomp.hpp"

namespace polynorm {

GrothendieckElement::GrothendieckElement(Polytope plus, Polytope minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  require_same_dim(plus_.dim(), minus_.dim());
}

GrothendieckElement GrothendieckElement::embed(Polytope p) {
  const std::size_t dim = p.dim();
  return GrothendieckElement(std::move(p), Polytope::origin(dim));
}

GrothendieckElement GrothendieckElement::zero(std::size_t dim) {
  return GrothendieckElement(Polytope::origin(dim), Polytope::origin(dim));
}

bool element_eq(const GrothendieckElement& x, const GrothendieckElement& y) {
  require_same_dim(x.dim(), y.dim());
  return equal(x.plus() + y.minus(), y.plus() + x.minus());
}

GrothendieckElement add(const GrothendieckElement& x, const GrothendieckElement& y) {
  require_same_dim(x.dim(), y.dim());
  return {x.plus() + y.plus(), x.minus() + y.minus()};
}

GrothendieckElement negate(const GrothendieckElement& x) { return {x.minus(), x.plus()}; }

GrothendieckElement mirror_element(const GrothendieckElement& x) {
  return {mirror(x.plus()), mirror(x.minus())};
}

bool is_symmetric_element(const GrothendieckElement& x) {
  return equal(x.plus() + mirror(x.minus()), mirror(x.plus()) + x.minus());
}

bool verify_certificate(const GrothendieckElement& x, const NormDifferenceCertificate& cert) {
  require_same_dim(x.dim(), cert.u.dim());
  require_same_dim(x.dim(), cert.v.dim());
  return equal(x.plus() + cert.v + mirror(cert.v), x.minus() + cert.u + mirror(cert.u));
}

NormDifferenceCertificate norm_difference(const GrothendieckElement& x) {
  if (!is_symmetric_element(x)) {
    throw Error(ErrorCode::NotSymmetric, "element is not symmetric");
  }
  const Polytope folded = x.plus() + mirror(x.minus());
  NormDecomposition dec = decompose(folded);
  NormDifferenceCertificate cert{std::move(dec.r), dec.q + x.minus()};
  if (!verify_certificate(x, cert)) {
    throw Error(ErrorCode::IdentityCheckFailed, "norm difference certificate failed to verify");
  }
  return cert;
}

}  // namespace polynorm
