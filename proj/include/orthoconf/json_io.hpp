#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "orthoconf/configuration.hpp"
#include "orthoconf/graph.hpp"
#include "orthoconf/invariants.hpp"
#include "orthoconf/matrix.hpp"
#include "orthoconf/sphere.hpp"
#include "orthoconf/stability.hpp"

namespace orthoconf::json {

using Json = nlohmann::ordered_json;

// Input did not match the documented schema. `path` names the offending
// field, e.g. "$.terms[2].coeff".
class SchemaError : public std::invalid_argument {
public:
    SchemaError(std::string path, const std::string& message)
        : std::invalid_argument(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Throws SchemaError on a missing required key or any key outside both lists.
void check_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {});

// Scalars are "p/q" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& path);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path);

Json to_json(const SymmetricMatrix& m);
// Rejects non-square or non-symmetric input.
SymmetricMatrix symmetric_from_json(const Json& j, const std::string& path);

// {"form": [[...]] (optional, identity by default), "vectors": [[...], ...]}
Json to_json(const PointConfiguration& c);
PointConfiguration configuration_from_json(const Json& j, const std::string& path);

// {"m": 3, "edges": [[1,2],[3,3]]}, 1-based vertices.
Json to_json(const GraphMonomial& g);
GraphMonomial graph_from_json(const Json& j, const std::string& path);
Json edges_to_json(const GraphMonomial& g);
GraphMonomial graph_from_edges(std::size_t m, const Json& edges, const std::string& path);

// {"m": 3, "terms": [{"coeff": "2", "edges": [[1,2],...]}, ...]}
Json to_json(const InvariantPolynomial& p);
InvariantPolynomial polynomial_from_json(const Json& j, const std::string& path);

// {"n": 2, "center": ["0","0"], "radius_sq": "1"}
Json to_json(const Sphere& s);
Sphere sphere_from_json(const Json& j, const std::string& path);

// {"coords": ["1","0","0","1/2"]}
Json to_json(const LiftedPoint& p);
LiftedPoint lifted_from_json(const Json& j, const std::string& path);

// {"status": ..., "m_prime": k, "witness": {"type": ...}, "permutation": [...],
// "one_ps": [...]}; indices are 1-based.
Json to_json(const StabilityVerdict& v);
StabilityVerdict verdict_from_json(const Json& j, const std::string& path);

}  // namespace orthoconf::json
