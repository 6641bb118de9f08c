#include "orthoconf/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthoconf/errors.hpp"
#include "orthoconf/graph.hpp"
#include "orthoconf/invariants.hpp"
#include "orthoconf/json_io.hpp"
#include "orthoconf/sphere.hpp"
#include "orthoconf/stability.hpp"

namespace orthoconf {

namespace {

using json::Json;

constexpr std::uint64_t default_seed = 12345;

struct Options {
    std::string input = "-";
    std::uint64_t seed = default_seed;
    std::size_t trials = 20;
    std::optional<std::size_t> cap_m;
    bool pretty = false;
    std::size_t m = 0;
    std::size_t d = 1;
};

struct Result {
    Json body;
    int code = exit_code::ok;
};

Json read_input(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.input == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(opt.input);
        if (!file) throw json::SchemaError("$", "cannot open input file " + opt.input);
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    return Json::parse(text);
}

// A sphere ({"n", "center", "radius_sq"}) or a lifted point ({"coords"}).
LiftedPoint point_from_json(const Json& j, const std::string& path) {
    if (j.is_object() && j.contains("coords")) return json::lifted_from_json(j, path);
    return lift(json::sphere_from_json(j, path));
}

std::pair<LiftedPoint, LiftedPoint> pair_from_json(const Json& j) {
    json::check_keys(j, "$", {"first", "second"});
    return {point_from_json(j["first"], "$.first"), point_from_json(j["second"], "$.second")};
}

Result cmd_classify(const Json& input, const Options& opt) {
    StabilityCaps caps;
    if (opt.cap_m) caps.max_vertices = *opt.cap_m;
    StabilityVerdict verdict;
    if (input.is_object() && input.contains("gram")) {
        json::check_keys(input, "$", {"gram"});
        verdict = classify(json::symmetric_from_json(input["gram"], "$.gram"), caps);
    } else {
        verdict = classify(json::configuration_from_json(input, "$"), caps);
    }
    const int code = verdict.status == Stability::stable                ? exit_code::stable
                     : verdict.status == Stability::strictly_semistable ? exit_code::strictly_semistable
                                                                        : exit_code::unstable;
    return {json::to_json(verdict), code};
}

Result cmd_count(const Options& opt) {
    EnumerationCaps caps;
    if (opt.cap_m) {
        caps.max_class_vertices = *opt.cap_m;
        caps.max_regular_vertices = *opt.cap_m;
    }
    if (opt.m < 1) throw std::invalid_argument("--m must be at least 1");
    if (opt.d < 1) throw std::invalid_argument("--d must be at least 1");
    if (opt.m > caps.max_class_vertices)
        throw CapExceeded("m = " + std::to_string(opt.m) + " exceeds the cap " + std::to_string(caps.max_class_vertices));
    const auto k = enumerate_determinantal_classes(opt.m, caps).size();
    const auto gf = km_from_generating_function(opt.m);
    Json lattice = Json::object();
    for (std::size_t d = 1; d <= opt.d; ++d)
        lattice[std::to_string(d)] = enumerate_regular_multigraphs(opt.m, d, caps).size();
    return {Json{{"m", opt.m}, {"k", k}, {"lattice_points", lattice}, {"gf_check", gf.back() == k}}};
}

Result cmd_sphere(const std::string& sub, const Json& input) {
    if (sub == "lift") return {json::to_json(lift(json::sphere_from_json(input, "$")))};
    if (sub == "unlift") {
        const auto outcome = unlift(json::lifted_from_json(input, "$"));
        if (const auto* s = std::get_if<Sphere>(&outcome))
            return {Json{{"outcome", "sphere"}, {"sphere", json::to_json(*s)}}};
        return {Json{{"outcome", "at_infinity"}, {"point", json::to_json(std::get<AtInfinity>(outcome).point)}}};
    }
    if (sub == "singular") {
        const auto s = is_singular(point_from_json(input, "$"));
        return {Json{{"singular", s.singular}, {"discriminant", json::to_json(s.discriminant)}}};
    }
    if (sub == "orthogonal") {
        const auto [p, q] = pair_from_json(input);
        return {Json{{"orthogonal", are_orthogonal(p, q)}, {"pairing", json::to_json(pairing(p, q))}}};
    }
    if (sub == "tangent") {
        const auto [p, q] = pair_from_json(input);
        const Rational det = tangency_determinant(p, q);
        return {Json{{"tangent", det.is_zero()}, {"determinant", json::to_json(det)}}};
    }
    if (sub == "common-point") {
        json::check_keys(input, "$", {"spheres"});
        if (!input["spheres"].is_array()) throw json::SchemaError("$.spheres", "expected an array");
        std::vector<LiftedPoint> points;
        for (std::size_t i = 0; i < input["spheres"].size(); ++i)
            points.push_back(point_from_json(input["spheres"][i], "$.spheres[" + std::to_string(i) + "]"));
        const auto r = common_point(points);
        return {Json{{"common_point", r.common},
                     {"determinant", json::to_json(r.determinant)},
                     {"polars_dependent", r.polars_dependent}}};
    }
    if (sub == "hyperbolic") {
        const auto [v, w] = pair_from_json(input);
        const auto h = hyperbolic_pair(v, w);
        return {Json{{"relation", std::string(to_string(h.relation))},
                     {"t_squared", json::to_json(h.t_squared)},
                     {"t", h.t ? json::to_json(*h.t) : Json(nullptr)},
                     {"abs_t", h.abs_t ? json::to_json(*h.abs_t) : Json(nullptr)}}};
    }
    throw std::logic_error("unhandled sphere subcommand " + sub);
}

Result cmd_invariants(const std::string& sub, const Options& opt, const std::function<Json()>& input) {
    if (sub == "det-basis") {
        EnumerationCaps caps;
        if (opt.cap_m) caps.max_class_vertices = *opt.cap_m;
        if (opt.m < 1) throw std::invalid_argument("--m must be at least 1");
        const auto p = det_in_class_basis(opt.m, caps);
        Json body = json::to_json(p);
        body["term_count"] = p.term_count();
        return {body};
    }
    const Json in = input();
    if (sub == "eval") {
        json::check_keys(in, "$", {"polynomial", "matrix"});
        const auto p = json::polynomial_from_json(in["polynomial"], "$.polynomial");
        const auto m = json::symmetric_from_json(in["matrix"], "$.matrix");
        return {Json{{"value", json::to_json(evaluate(p, m))}}};
    }
    if (sub == "kernel-test") {
        json::check_keys(in, "$", {"polynomial", "n"}, {"form", "evaluate_at"});
        const auto p = json::polynomial_from_json(in["polynomial"], "$.polynomial");
        if (!in["n"].is_number_unsigned()) throw json::SchemaError("$.n", "expected a nonnegative integer");
        const auto n = in["n"].get<std::size_t>();
        if (opt.trials == 0) throw std::invalid_argument("--trials must be positive");
        SymmetricMatrix form = SymmetricMatrix::identity(n + 1);
        if (in.contains("form")) {
            form = json::symmetric_from_json(in["form"], "$.form");
            if (form.size() != n + 1) throw json::SchemaError("$.form", "form must be (n+1) x (n+1)");
        }
        const auto r = kernel_membership_test(p, form, opt.trials, opt.seed);
        Json body{{"member", r.member}, {"trials_run", r.trials_run}, {"seed", opt.seed}};
        if (r.witness) {
            body["witness"] = json::to_json(*r.witness);
            body["witness_value"] = json::to_json(r.witness_value);
        }
        if (in.contains("evaluate_at"))
            body["value_at"] = json::to_json(evaluate(p, json::symmetric_from_json(in["evaluate_at"], "$.evaluate_at")));
        return {body};
    }
    if (sub == "factorize") {
        json::check_keys(in, "$", {"graph"}, {"avoid"});
        const auto g = json::graph_from_json(in["graph"], "$.graph");
        const auto valency = g.valency();
        if (!valency || *valency % 2 != 0 || *valency == 0)
            throw json::SchemaError("$.graph", "graph must be regular of positive even valency");
        EnumerationCaps caps;
        const std::size_t vcap = opt.cap_m.value_or(64);
        if (g.vertex_count() > vcap)
            throw CapExceeded("m = " + std::to_string(g.vertex_count()) + " exceeds the cap " + std::to_string(vcap));
        Json factors = Json::array();
        for (const auto& f : petersen_2_factorization(g)) factors.push_back(json::edges_to_json(f));
        Json body{{"m", g.vertex_count()}, {"factors", factors}};
        if (in.contains("avoid")) {
            const auto avoid = json::graph_from_json(in["avoid"], "$.avoid");
            body["avoiding"] = json::edges_to_json(factor_avoiding(g, avoid));
        }
        return {body};
    }
    throw std::logic_error("unhandled invariants subcommand " + sub);
}

Result cmd_reconstruct(const Json& input) {
    json::check_keys(input, "$", {"x", "y"}, {"form"});
    auto config = [&](const char* key) {
        Json c{{"vectors", input[key]}};
        if (input.contains("form")) c["form"] = input["form"];
        return json::configuration_from_json(c, std::string("$.") + key);
    };
    const auto a = recover_isometry(config("x"), config("y"));
    return {Json{{"isometry", a ? json::to_json(*a) : Json(nullptr)}}};
}

Json error_body(const std::string& kind, const std::string& message, const std::string& path = {}) {
    Json e{{"kind", kind}, {"message", message}};
    if (!path.empty()) e["path"] = path;
    return Json{{"error", e}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact orthogonal invariants, GIT stability and sphere geometry", "orthoconf"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--input", opt.input, "JSON input file, or - for stdin");
    app.add_option("--seed", opt.seed, "seed for randomized tests");
    app.add_option("--trials", opt.trials, "trials for the kernel membership test");
    app.add_option("--cap-m", opt.cap_m, "override the vertex cap of the command");
    app.add_flag("--pretty", opt.pretty, "indent the JSON output");

    auto* classify_cmd = app.add_subcommand("classify", "stability verdict of a Gram matrix or configuration");
    auto* count_cmd = app.add_subcommand("count", "determinantal-term and regular-graph counts");
    count_cmd->add_option("--m", opt.m, "number of points")->required();
    count_cmd->add_option("--d", opt.d, "largest half-valency to count");

    auto* sphere_cmd = app.add_subcommand("sphere", "sphere geometry");
    sphere_cmd->require_subcommand(1);
    for (const char* s : {"lift", "unlift", "singular", "orthogonal", "tangent", "common-point", "hyperbolic"})
        sphere_cmd->add_subcommand(s);

    auto* inv_cmd = app.add_subcommand("invariants", "graph-monomial invariants");
    inv_cmd->require_subcommand(1);
    for (const char* s : {"eval", "kernel-test", "factorize"}) inv_cmd->add_subcommand(s);
    inv_cmd->add_subcommand("det-basis")->add_option("--m", opt.m, "number of points")->required();

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "isometry between configurations with equal Gram matrices");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    auto emit = [&](const Json& body) { out << body.dump(opt.pretty ? 2 : -1) << '\n'; };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        emit(error_body("usage", e.what()));
        return exit_code::input_error;
    }

    const auto selected = [](CLI::App* parent) {
        for (auto* sub : parent->get_subcommands()) return sub->get_name();
        return std::string();
    };
    const auto input = [&] { return read_input(opt, in); };

    try {
        Result r;
        if (classify_cmd->parsed())
            r = cmd_classify(input(), opt);
        else if (count_cmd->parsed())
            r = cmd_count(opt);
        else if (sphere_cmd->parsed())
            r = cmd_sphere(selected(sphere_cmd), input());
        else if (inv_cmd->parsed())
            r = cmd_invariants(selected(inv_cmd), opt, input);
        else if (reconstruct_cmd->parsed())
            r = cmd_reconstruct(input());
        emit(r.body);
        return r.code;
    } catch (const json::SchemaError& e) {
        err << e.what() << '\n';
        emit(error_body("input", e.what(), e.path()));
        return exit_code::input_error;
    } catch (const NotNormalizable& e) {
        err << e.what() << '\n';
        Json body = error_body("not_normalizable", e.what());
        body["error"]["self_pairing"] = json::to_json(e.self_pairing());
        emit(body);
        return exit_code::input_error;
    } catch (const Json::exception& e) {
        err << e.what() << '\n';
        emit(error_body("input", e.what()));
        return exit_code::input_error;
    } catch (const CapExceeded& e) {
        err << e.what() << '\n';
        emit(error_body("cap_exceeded", e.what()));
        return exit_code::cap_exceeded;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        emit(error_body("input", e.what()));
        return exit_code::input_error;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        emit(error_body("input", e.what()));
        return exit_code::input_error;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        emit(error_body("input", e.what()));
        return exit_code::input_error;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        emit(error_body("internal", e.what()));
        return exit_code::internal_error;
    }
}

}  // namespace orthoconf
