#pragma once

#include <json.hpp>

#include <string>

#include "finfree/families.hpp"
#include "finfree/ffp.hpp"
#include "finfree/haar.hpp"
#include "finfree/matrix.hpp"
#include "finfree/moments.hpp"
#include "finfree/polynomial.hpp"

namespace finfree::json {

using Json = nlohmann::ordered_json;

// Scalars travel as strings ("-2/3", "1/2+3*i"); integers that describe shape
// (degree, n, indices) stay JSON numbers.

Json to_json(const Scalar& s);
Json to_json(const Polynomial& p);  // {"degree": n, "coeffs": [...]}
Json to_json(const Matrix& m);      // {"n": n, "entries": [[...], ...]}
Json to_json(const FfpReport& r);
Json to_json(const MinorTable& table);
Json to_json(const CycleSums& sums);
Json to_json(const MomentVector& m);
Json to_json(const CumulantVector& k);
Json to_json(const PairCheckReport& r);
Json to_json(const EklWitness& w);
Json to_json(const McResult& r);

Scalar scalar_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
FfpReport ffp_report_from_json(const Json& j);
MomentVector moments_from_json(const Json& j);
CumulantVector cumulants_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(malformed_json).
Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace finfree::json
