#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polynorm/grothendieck.hpp"
#include "polynorm/laurent.hpp"
#include "polynorm/normdecomp.hpp"
#include "polynorm/polytope.hpp"

namespace polynorm::json_io {

using Json = nlohmann::json;

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both forms are accepted on input.
Json to_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// {"dim": n, "vertices": [[...], ...]} with canonical vertex order.
Json to_json(const LatticePoint& p);
Json to_json(const Polytope& p);
/// Canonicalizes on load. Malformed input raises InvalidInput.
Polytope polytope_from_json(const Json& j);

/// {"plus": <polytope>, "minus": <polytope>}
Json to_json(const GrothendieckElement& x);
GrothendieckElement element_from_json(const Json& j);

/// {"u": <polytope>, "v": <polytope>}
Json to_json(const NormDifferenceCertificate& c);
NormDifferenceCertificate certificate_from_json(const Json& j);

/// {"p": ..., "q": ..., "r": ..., "verified": true}
Json to_json(const NormDecomposition& d);
NormDecomposition decomposition_from_json(const Json& j);

/// {"is_norm": bool, "witness": <polytope|null>, "lattice_point_count": int}
Json to_json(const NormSearchResult& r);

/// {"vars": [...], "terms": [{"exp": [...], "coef": c}, ...]}
Json to_json(const LaurentPolynomial& f, const std::vector<std::string>& vars);
std::pair<LaurentPolynomial, std::vector<std::string>> laurent_from_json(const Json& j);

}  // namespace polynorm::json_io
