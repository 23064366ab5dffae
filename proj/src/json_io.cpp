#include "polynorm/json_io.hpp"

#include <limits>

#include "polynorm/error.hpp"

namespace polynorm::json_io {
namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidInput, message);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) invalid(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) invalid(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    invalid(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

LatticePoint point_from_json(const Json& j) {
  if (!j.is_array()) invalid("a point must be an array of integers");
  std::vector<Integer> coords;
  coords.reserve(j.size());
  for (const auto& c : j) coords.push_back(integer_from_json(c));
  return LatticePoint(std::move(coords));
}

}  // namespace

Json to_json(const Integer& value) {
  if (value.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(value.get_si());
  }
  return value.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer value;
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || value.set_str(s, 10) != 0) invalid("'" + s + "' is not an integer");
    return value;
  }
  invalid("expected an integer, got " + j.dump());
}

Json to_json(const LatticePoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Polytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  return Json{{"dim", p.dim()}, {"vertices", std::move(vertices)}};
}

Polytope polytope_from_json(const Json& j) {
  const std::size_t dim = size_from_json(field(j, "dim"), "dim");
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) invalid("'vertices' must be an array");
  std::vector<LatticePoint> points;
  points.reserve(vertices.size());
  for (const auto& v : vertices) points.push_back(point_from_json(v));
  return canonical_hull(points, dim);
}

Json to_json(const GrothendieckElement& x) {
  return Json{{"plus", to_json(x.plus())}, {"minus", to_json(x.minus())}};
}

GrothendieckElement element_from_json(const Json& j) {
  return {polytope_from_json(field(j, "plus")), polytope_from_json(field(j, "minus"))};
}

Json to_json(const NormDifferenceCertificate& c) {
  return Json{{"u", to_json(c.u)}, {"v", to_json(c.v)}};
}

NormDifferenceCertificate certificate_from_json(const Json& j) {
  return {polytope_from_json(field(j, "u")), polytope_from_json(field(j, "v"))};
}

Json to_json(const NormDecomposition& d) {
  return Json{{"p", to_json(d.p)}, {"q", to_json(d.q)}, {"r", to_json(d.r)}, {"verified", true}};
}

NormDecomposition decomposition_from_json(const Json& j) {
  return {polytope_from_json(field(j, "p")), polytope_from_json(field(j, "q")),
          polytope_from_json(field(j, "r"))};
}

Json to_json(const NormSearchResult& r) {
  return Json{{"is_norm", r.witness.has_value()},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"lattice_point_count", r.lattice_point_count}};
}

Json to_json(const LaurentPolynomial& f, const std::vector<std::string>& vars) {
  require_same_dim(f.dim(), vars.size());
  Json terms = Json::array();
  for (const auto& [exp, coef] : f.terms()) {
    terms.push_back(Json{{"exp", to_json(exp)}, {"coef", to_json(coef)}});
  }
  return Json{{"vars", vars}, {"terms", std::move(terms)}};
}

std::pair<LaurentPolynomial, std::vector<std::string>> laurent_from_json(const Json& j) {
  const Json& vars_json = field(j, "vars");
  if (!vars_json.is_array()) invalid("'vars' must be an array of names");
  std::vector<std::string> vars;
  for (const auto& v : vars_json) {
    if (!v.is_string()) invalid("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) invalid("'terms' must be an array");
  LaurentPolynomial f(vars.size());
  for (const auto& t : terms) {
    LatticePoint exp = point_from_json(field(t, "exp"));
    require_same_dim(vars.size(), exp.dim());
    f = add(f, LaurentPolynomial::monomial(exp, integer_from_json(field(t, "coef"))));
  }
  return {std::move(f), std::move(vars)};
}

}  // namespace polynorm::json_io
