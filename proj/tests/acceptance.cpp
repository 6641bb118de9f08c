// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "orthoconf/graph.hpp"
#include "orthoconf/invariants.hpp"
#include "orthoconf/linalg.hpp"
#include "orthoconf/sphere.hpp"
#include "orthoconf/stability.hpp"

using namespace orthoconf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
}

void note(const std::string& text) { std::printf("INFO %s\n", text.c_str()); }

GraphMonomial graph(std::size_t m, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    std::vector<Edge> out;
    for (auto [a, b] : edges) out.push_back(Edge::make(a, b));
    return GraphMonomial(m, out);
}

Rational dist_sq(const Vector& a, const Vector& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

Outcome counts() {
    const std::size_t expected[] = {5, 17, 73, 338};
    std::ostringstream got;
    bool pass = true;
    for (std::size_t m = 3; m <= 6; ++m) {
        const auto k = enumerate_determinantal_classes(m).size();
        got << (m > 3 ? "," : "") << k;
        pass = pass && k == expected[m - 3];
    }
    return {pass, "k(3..6) = " + got.str() + ", expected 5,17,73,338"};
}

Outcome generating_function() {
    const auto gf = km_from_generating_function(7);
    std::ostringstream got;
    bool pass = true;
    for (std::size_t m = 1; m <= 7; ++m) {
        const auto k = enumerate_determinantal_classes(m).size();
        got << (m > 1 ? "," : "") << gf[m - 1].get_str();
        pass = pass && gf[m - 1] == k;
    }
    return {pass, "m! [t^m] for m = 1..7: " + got.str()};
}

Outcome counterexample_suite() {
    const auto a = fixture::counterexample();
    const Matrix am = a.to_matrix();
    bool pass = rank(a) == 4 && oracle::minor_rank(am) == 4;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < 5; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            pass = pass && (a(i, j) * minor_det(a, rows, cols)).is_zero();
        }
    pass = pass && a(2, 0) * a(3, 1) * a(0, 2) * a(1, 3) * a(4, 4) == Rational(1);
    pass = pass && classify(a).status == Stability::stable;

    const std::vector<std::size_t> idx{1, 2, 3, 4};
    const auto rel = InvariantPolynomial::monomial(graph(5, {{0, 2}, {0, 2}, {0, 3}, {0, 3}, {1, 4}, {1, 4}})) *
                     minor_polynomial(5, idx, idx);
    const auto kt = kernel_membership_test(rel, 2, 20, 12345);
    const Rational value = evaluate(rel, a);
    const Rational oracle_value =
        am(0, 2) * am(0, 2) * am(0, 3) * am(0, 3) * am(1, 4) * am(1, 4) * oracle::laplace_minor(am, {1, 2, 3, 4}, {1, 2, 3, 4});
    pass = pass && kt.member && kt.trials_run == 20 && value == Rational(-3) && oracle_value == value;
    return {pass, "rank 4, naive products 0, matching product 1, stable, kernel test " +
                      std::string(kt.member ? "member" : "not member") + ", value on A " + value.str()};
}

Outcome stability_cross_validation(long weight_bound, std::size_t random_m5) {
    OracleCaps caps;
    caps.max_weight = weight_bound;
    std::size_t checked = 0, oracle_disagree = 0, term_disagree = 0;
    std::string first;
    std::mt19937_64 rng(2024);
    auto check = [&](const SymmetricMatrix& m, std::uint64_t code) {
        ++checked;
        const auto v = classify(m);
        const auto o = one_ps_oracle(m, weight_bound, caps);
        if (o.status != v.status) {
            if (oracle_disagree++ == 0)
                first = "first oracle disagreement: m = " + std::to_string(m.size()) + ", pattern " +
                        std::to_string(code) + ", classify " + std::string(to_string(v.status)) + ", oracle " +
                        std::string(to_string(o.status));
        }
        if ((v.status == Stability::unstable) != !oracle::has_nonzero_term(m)) ++term_disagree;
    };
    for (std::size_t m = 3; m <= 4; ++m)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * (m + 1) / 2)); ++code)
            check(oracle::with_support(oracle::pattern_from_code(m, code), rng), code);
    for (std::size_t t = 0; t < random_m5; ++t) {
        const std::uint64_t code = rng() % (1U << 15);
        check(oracle::with_support(oracle::pattern_from_code(5, code), rng), code);
    }
    std::ostringstream d;
    d << checked << " matrices, " << oracle_disagree << " oracle disagreements, " << term_disagree
      << " determinantal-term disagreements";
    if (!first.empty()) d << "; " << first;
    return {oracle_disagree == 0 && term_disagree == 0, d.str()};
}

Outcome hyp_relations() {
    const auto p = det_in_class_basis(3);
    const auto t0 = graph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto t1 = graph(3, {{0, 0}, {1, 2}, {1, 2}});
    const auto t2 = graph(3, {{1, 1}, {0, 2}, {0, 2}});
    const auto t3 = graph(3, {{2, 2}, {0, 1}, {0, 1}});
    const auto t4 = GraphMonomial::all_loops(3);
    bool pass = p.term_count() == 5 && p.coefficient(t0) == Rational(2) && p.coefficient(t1) == Rational(-1) &&
                p.coefficient(t2) == Rational(-1) && p.coefficient(t3) == Rational(-1) && p.coefficient(t4) == Rational(1);
    pass = pass && t1 + t2 + t3 == t0 + t0 + t4;
    const auto rels = naive_linear_relations(4);
    const auto r = span_rank(rels);
    pass = pass && rels.size() == 10 && r == 7;
    return {pass, "coefficients (2,-1,-1,-1,1), t1 t2 t3 = t0^2 t4, " + std::to_string(rels.size()) +
                      " relations of span rank " + std::to_string(r)};
}

Outcome petersen_properties() {
    std::size_t graphs = 0, avoid_checks = 0;
    bool pass = true;
    std::mt19937_64 rng(6);
    for (std::size_t m = 1; m <= 5; ++m)
        for (std::size_t d = 1; d <= 3; ++d)
            for (const auto& g : enumerate_regular_multigraphs(m, d)) {
                ++graphs;
                const auto parts = petersen_2_factorization(g);
                GraphMonomial sum(m, {});
                for (const auto& f : parts) {
                    pass = pass && f.is_two_regular();
                    sum = sum + f;
                }
                pass = pass && parts.size() == d && sum == g;
                for (int trial = 0; trial < 3; ++trial) {
                    const std::size_t size = rng() % d;  // |F| < k = d
                    auto pool = g.edges();
                    std::vector<Edge> picked;
                    for (std::size_t i = 0; i < size; ++i) {
                        const std::size_t at = rng() % pool.size();
                        picked.push_back(pool[at]);
                        pool.erase(pool.begin() + static_cast<long>(at));
                    }
                    const GraphMonomial avoid(m, picked);
                    const auto f = factor_avoiding(g, avoid);
                    pass = pass && f.is_two_regular() && g.minus(avoid).contains(f);
                    ++avoid_checks;
                }
            }
    return {pass, std::to_string(graphs) + " regular multigraphs, " + std::to_string(avoid_checks) + " avoidance checks"};
}

Outcome sphere_dictionary() {
    std::mt19937_64 rng(7);
    auto r = [&] { return oracle::random_rational(rng, 12, 6); };
    bool pass = true;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + t % 4;
        Sphere s{fixture::random_vector(n, rng, 12, 6), r()};
        pass = pass && std::get<Sphere>(unlift(lift(s))) == s && quadric_value(lift(s)) == s.radius_sq;
    }
    std::size_t orth_true = 0, tan_true = 0;
    const Vector dir{Rational::parse("3/5"), Rational::parse("4/5")};
    for (int t = 0; t < 1000; ++t) {
        Sphere a{fixture::random_vector(2, rng, 12, 6), r()};
        Sphere b{fixture::random_vector(2, rng, 12, 6), r()};
        if (t % 3 == 1) {
            // |c - c'|^2 = r^2 + r'^2
            b.radius_sq = dist_sq(a.center, b.center) - a.radius_sq;
        } else if (t % 3 == 2) {
            // centers at distance r + r' along a rational unit direction
            const Rational ra = r().abs(), rb = r().abs();
            a.radius_sq = ra * ra;
            b.radius_sq = rb * rb;
            b.center = a.center + (ra + rb) * dir;
        }
        const Rational d2 = dist_sq(a.center, b.center);
        const bool orth = are_orthogonal(lift(a), lift(b));
        const bool tan = are_tangent(lift(a), lift(b));
        const Rational e = d2 - a.radius_sq - b.radius_sq;
        pass = pass && orth == (d2 == a.radius_sq + b.radius_sq);
        pass = pass && tan == (e * e == Rational(4) * a.radius_sq * b.radius_sq);
        if (t % 3 == 1) pass = pass && orth;
        if (t % 3 == 2) pass = pass && tan;
        orth_true += orth;
        tan_true += tan;
    }
    for (int t = 0; t < 100; ++t) {
        const Vector x = fixture::random_vector(2, rng, 12, 6);
        std::vector<LiftedPoint> ps;
        for (int k = 0; k < 3; ++k) {
            const Vector c = fixture::random_vector(2, rng, 12, 6);
            ps.push_back(lift(Sphere{c, dist_sq(c, x)}));
        }
        // common_point throws if its two evaluation paths disagree
        pass = pass && common_point(ps).common;
        std::vector<LiftedPoint> qs;
        for (int k = 0; k < 3; ++k) qs.push_back(lift(Sphere{fixture::random_vector(2, rng, 12, 6), r()}));
        common_point(qs);
    }
    return {pass, "1000 round trips, 1000 pairs (" + std::to_string(orth_true) + " orthogonal, " +
                      std::to_string(tan_true) + " tangent), 100 concurrent triples"};
}

Outcome isometry_recovery() {
    std::mt19937_64 rng(8);
    bool pass = true;
    std::size_t nulls = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 4;
        const std::size_t dim = n + 2;
        const SymmetricMatrix form = t % 3 == 0   ? SymmetricMatrix::identity(dim)
                                     : t % 3 == 1 ? fixture::lorentz(dim)
                                                  : fundamental_form(n);
        const Matrix a = fixture::random_orthogonal(form, rng);
        const std::size_t m = 1 + rng() % dim;
        std::vector<Vector> xs;
        while (xs.size() < m) {
            xs.push_back(fixture::random_vector(dim, rng));
            if (rank(Matrix::from_columns(xs)) < xs.size()) xs.pop_back();
        }
        const PointConfiguration x(form, xs);
        const PointConfiguration y = x.transformed(a);
        const auto rec = recover_isometry(x, y);
        pass = pass && rec && preserves_form(*rec, form);
        if (rec)
            for (const auto& v : xs) pass = pass && *rec * v == a * v;

        auto ys = y.vectors();
        do ys[rng() % m][rng() % dim] += Rational(1 + static_cast<long>(rng() % 3));
        while (gram_matrix(PointConfiguration(form, ys)) == gram_matrix(x) || is_zero(ys[0]));
        const bool none = !recover_isometry(x, PointConfiguration(form, ys)).has_value();
        nulls += none;
        pass = pass && none;
    }
    return {pass, "100 recoveries exact, " + std::to_string(nulls) + "/100 perturbed inputs rejected"};
}

Outcome strictly_semistable_fixture() {
    const auto v = classify(fixture::aabb());
    bool pass = v.status == Stability::strictly_semistable && v.subsets == SubsetWitness{{0, 1}, {0, 1}};
    // the 6 arrangements of a, a, b, b on the hyperbolic line
    const Vector a{1, 0}, b{0, 1};
    std::set<std::vector<Rational>> patterns;
    std::size_t semistable = 0;
    for (const char* word : {"aabb", "abab", "abba", "baab", "baba", "bbaa"}) {
        std::vector<Vector> vs;
        for (const char* c = word; *c; ++c) vs.push_back(*c == 'a' ? a : b);
        const auto g = gram_matrix(PointConfiguration(fixture::hyperbolic_plane(), vs));
        const auto verdict = classify(g);
        semistable += verdict.status == Stability::strictly_semistable && witnesses_hold(g, verdict);
        std::vector<Rational> flat;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) flat.push_back(g(i, j));
        patterns.insert(flat);
    }
    pass = pass && semistable == 6 && patterns.size() == 3;
    return {pass, std::to_string(semistable) + "/6 strictly semistable, " + std::to_string(patterns.size()) +
                      " distinct pairing patterns"};
}

}  // namespace

int main() {
    criterion(1, "determinantal-term counts", 5, counts);
    note("enumerated k(6) = " + std::to_string(enumerate_determinantal_classes(6).size()) +
         ", generating function k(6) = " + km_from_generating_function(6).back().get_str());
    criterion(2, "generating-function agreement", 1, generating_function);
    criterion(3, "counterexample suite", 1, counterexample_suite);
    criterion(4, "stability cross-validation (weight bound 3)", 120, [] { return stability_cross_validation(3, 500); });
    {
        const auto o = stability_cross_validation(4, 500);
        note("same check with weight bound 4: " + std::string(o.pass ? "agrees" : "disagrees") + ", " + o.detail);
    }
    criterion(5, "determinant expansion and linear relations", 1, hyp_relations);
    criterion(6, "Petersen properties", 60, petersen_properties);
    criterion(7, "sphere dictionary", 10, sphere_dictionary);
    criterion(8, "isometry recovery", 10, isometry_recovery);
    criterion(9, "strictly semistable fixture", 1, strictly_semistable_fixture);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
