#pragma once

// JSON encodings. Exact values travel as strings: a CycNum a + b w is
// {"one": "a", "omega": "b"} with each part "p/q" or "p".

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "omegalie/backends.hpp"
#include "omegalie/freealg.hpp"
#include "omegalie/identity.hpp"
#include "omegalie/matrix.hpp"
#include "omegalie/structconst.hpp"

namespace omegalie {

using Json = nlohmann::ordered_json;

/// Structurally valid JSON with the wrong shape or values.
class JsonSchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses text; syntax errors become JsonSchemaError naming the byte offset.
Json parse_json(const std::string& text);

Json to_json(const Rat& r);
Json to_json(const CycNum& c);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const CubicMatrix& a);
Json to_json(const FreeExpr& e);
Json to_json(const Tensor3& t);
Json to_json(const Tensor13& c);
Json to_json(const VerificationReport& rep);
Json to_json(const TraceEntry& entry);

/// Accepts the string forms and, for convenience, plain JSON integers.
Rat rat_from_json(const Json& j);
CycNum cyc_from_json(const Json& j);
Vec vec_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
CubicMatrix cubic_from_json(const Json& j);
Tensor3 tensor3_from_json(const Json& j);
Tensor13 tensor13_from_json(const Json& j);

}  // namespace omegalie
