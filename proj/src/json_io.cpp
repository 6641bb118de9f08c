#include "orthoconf/json_io.hpp"

#include <algorithm>

namespace orthoconf::json {

namespace {

std::string at(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
}

std::size_t index_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    const auto v = j.get<long long>();
    if (v < 0) throw SchemaError(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

// 1-based vertex label -> 0-based index.
std::size_t vertex_from_json(const Json& j, std::size_t m, const std::string& path) {
    const std::size_t v = index_from_json(j, path);
    if (v < 1 || v > m) throw SchemaError(path, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
    return v - 1;
}

Json indices_to_json(const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
}

std::vector<std::size_t> indices_from_json(const Json& j, std::size_t m, const std::string& path) {
    require_array(j, path);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(vertex_from_json(j[k], m, at(path, k)));
    return out;
}

}  // namespace

void check_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    for (auto key : required)
        if (!j.contains(key)) throw SchemaError(at(path, key), "missing required field");
    for (const auto& [key, value] : j.items()) {
        const auto known = [&](std::initializer_list<std::string_view> keys) {
            return std::find(keys.begin(), keys.end(), key) != keys.end();
        };
        if (!known(required) && !known(optional)) throw SchemaError(at(path, key), "unknown field");
    }
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<unsigned long long>())
                                                             : Rational(j.get<long long>());
    if (!j.is_string()) throw SchemaError(path, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Vector vector_from_json(const Json& j, const std::string& path) {
    require_array(j, path);
    Vector v;
    v.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) v.push_back(rational_from_json(j[k], at(path, k)));
    return v;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
    require_array(j, path);
    if (j.empty()) throw SchemaError(path, "empty matrix");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(vector_from_json(j[i], at(path, i)));
        if (rows.back().size() != rows.front().size()) throw SchemaError(at(path, i), "ragged matrix row");
    }
    if (rows.front().empty()) throw SchemaError(path, "empty matrix");
    return Matrix::from_rows(rows);
}

Json to_json(const SymmetricMatrix& m) { return to_json(m.to_matrix()); }

SymmetricMatrix symmetric_from_json(const Json& j, const std::string& path) {
    const Matrix m = matrix_from_json(j, path);
    if (!m.is_square()) throw SchemaError(path, "matrix is not square");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = i + 1; k < m.cols(); ++k)
            if (m(i, k) != m(k, i))
                throw SchemaError(path, "matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                            std::to_string(k + 1) + ")");
    return SymmetricMatrix::from_matrix(m);
}

Json to_json(const PointConfiguration& c) {
    Json vectors = Json::array();
    for (const auto& v : c.vectors()) vectors.push_back(to_json(v));
    return Json{{"form", to_json(c.form())}, {"vectors", vectors}};
}

PointConfiguration configuration_from_json(const Json& j, const std::string& path) {
    check_keys(j, path, {"vectors"}, {"form"});
    const std::string vpath = at(path, "vectors");
    require_array(j["vectors"], vpath);
    std::vector<Vector> vectors;
    for (std::size_t k = 0; k < j["vectors"].size(); ++k)
        vectors.push_back(vector_from_json(j["vectors"][k], at(vpath, k)));
    if (vectors.empty()) throw SchemaError(vpath, "no vectors");
    try {
        if (j.contains("form")) return PointConfiguration(symmetric_from_json(j["form"], at(path, "form")), vectors);
        return PointConfiguration::euclidean(vectors);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path, e.what());
    }
}

Json edges_to_json(const GraphMonomial& g) {
    Json out = Json::array();
    for (const auto& e : g.edges()) out.push_back(Json::array({e.u + 1, e.v + 1}));
    return out;
}

GraphMonomial graph_from_edges(std::size_t m, const Json& edges, const std::string& path) {
    require_array(edges, path);
    std::vector<Edge> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string epath = at(path, k);
        if (!edges[k].is_array() || edges[k].size() != 2) throw SchemaError(epath, "expected a pair [i, j]");
        out.push_back(Edge::make(vertex_from_json(edges[k][0], m, at(epath, 0)),
                                 vertex_from_json(edges[k][1], m, at(epath, 1))));
    }
    return GraphMonomial(m, std::move(out));
}

Json to_json(const GraphMonomial& g) { return Json{{"m", g.vertex_count()}, {"edges", edges_to_json(g)}}; }

GraphMonomial graph_from_json(const Json& j, const std::string& path) {
    check_keys(j, path, {"m", "edges"});
    const std::size_t m = index_from_json(j["m"], at(path, "m"));
    return graph_from_edges(m, j["edges"], at(path, "edges"));
}

Json to_json(const InvariantPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [g, c] : p.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"edges", edges_to_json(g)}});
    return Json{{"m", p.vertex_count()}, {"terms", terms}};
}

InvariantPolynomial polynomial_from_json(const Json& j, const std::string& path) {
    check_keys(j, path, {"m", "terms"});
    const std::size_t m = index_from_json(j["m"], at(path, "m"));
    const std::string tpath = at(path, "terms");
    require_array(j["terms"], tpath);
    std::vector<std::pair<Rational, GraphMonomial>> terms;
    for (std::size_t k = 0; k < j["terms"].size(); ++k) {
        const Json& t = j["terms"][k];
        const std::string p = at(tpath, k);
        check_keys(t, p, {"coeff", "edges"});
        terms.emplace_back(rational_from_json(t["coeff"], at(p, "coeff")), graph_from_edges(m, t["edges"], at(p, "edges")));
    }
    return InvariantPolynomial(m, terms);
}

Json to_json(const Sphere& s) {
    return Json{{"n", s.ambient_dim()}, {"center", to_json(s.center)}, {"radius_sq", to_json(s.radius_sq)}};
}

Sphere sphere_from_json(const Json& j, const std::string& path) {
    check_keys(j, path, {"n", "center", "radius_sq"});
    const std::size_t n = index_from_json(j["n"], at(path, "n"));
    Sphere s{vector_from_json(j["center"], at(path, "center")), rational_from_json(j["radius_sq"], at(path, "radius_sq"))};
    if (n < 1) throw SchemaError(at(path, "n"), "n must be at least 1");
    if (s.center.size() != n) throw SchemaError(at(path, "center"), "center must have n coordinates");
    return s;
}

Json to_json(const LiftedPoint& p) { return Json{{"coords", to_json(p.coords())}}; }

LiftedPoint lifted_from_json(const Json& j, const std::string& path) {
    check_keys(j, path, {"coords"});
    try {
        return LiftedPoint(vector_from_json(j["coords"], at(path, "coords")));
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SchemaError(at(path, "coords"), e.what());
    }
}

Json to_json(const StabilityVerdict& v) {
    Json out{{"status", std::string(to_string(v.status))}, {"m_prime", v.m_prime}};
    if (v.subsets)
        out["witness"] = Json{{"type", "subsets"}, {"I", indices_to_json(v.subsets->I)}, {"J", indices_to_json(v.subsets->J)}};
    else if (v.permutation)
        out["witness"] = Json{{"type", "permutation"}, {"sigma", indices_to_json(*v.permutation)}};
    if (v.subsets && v.permutation) out["permutation"] = indices_to_json(*v.permutation);
    if (v.one_ps) out["one_ps"] = Json(*v.one_ps);
    return out;
}

StabilityVerdict verdict_from_json(const Json& j, const std::string& path) {
    check_keys(j, path, {"status", "m_prime", "witness"}, {"permutation", "one_ps"});
    StabilityVerdict v;
    const std::string status = j["status"].is_string() ? j["status"].get<std::string>() : "";
    if (status == "stable")
        v.status = Stability::stable;
    else if (status == "strictly_semistable")
        v.status = Stability::strictly_semistable;
    else if (status == "unstable")
        v.status = Stability::unstable;
    else
        throw SchemaError(at(path, "status"), "unknown status");
    v.m_prime = index_from_json(j["m_prime"], at(path, "m_prime"));

    // Indices are range-checked by the caller against the matrix.
    constexpr std::size_t any = static_cast<std::size_t>(-1) / 2;
    const Json& w = j["witness"];
    const std::string wpath = at(path, "witness");
    if (!w.is_object() || !w.contains("type")) throw SchemaError(wpath, "expected a typed witness");
    if (w["type"] == "permutation") {
        check_keys(w, wpath, {"type", "sigma"});
        v.permutation = indices_from_json(w["sigma"], any, at(wpath, "sigma"));
    } else if (w["type"] == "subsets") {
        check_keys(w, wpath, {"type", "I", "J"});
        v.subsets = SubsetWitness{indices_from_json(w["I"], any, at(wpath, "I")),
                                  indices_from_json(w["J"], any, at(wpath, "J"))};
    } else {
        throw SchemaError(at(wpath, "type"), "unknown witness type");
    }
    if (j.contains("permutation")) v.permutation = indices_from_json(j["permutation"], any, at(path, "permutation"));
    if (j.contains("one_ps")) {
        const std::string opath = at(path, "one_ps");
        require_array(j["one_ps"], opath);
        OneParameterSubgroup r;
        for (std::size_t k = 0; k < j["one_ps"].size(); ++k) {
            if (!j["one_ps"][k].is_number_integer()) throw SchemaError(at(opath, k), "expected an integer");
            r.push_back(j["one_ps"][k].get<long>());
        }
        v.one_ps = r;
    }
    return v;
}

}  // namespace orthoconf::json
