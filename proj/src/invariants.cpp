#include "orthoconf/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "orthoconf/linalg.hpp"

namespace orthoconf {

InvariantPolynomial::InvariantPolynomial(std::size_t vertex_count,
                                         const std::vector<std::pair<Rational, GraphMonomial>>& terms)
    : vertex_count_(vertex_count) {
    for (const auto& [c, g] : terms) add_term(g, c);
}

InvariantPolynomial InvariantPolynomial::monomial(const GraphMonomial& g, const Rational& coeff) {
    InvariantPolynomial p(g.vertex_count());
    p.add_term(g, coeff);
    return p;
}

void InvariantPolynomial::add_term(const GraphMonomial& g, const Rational& coeff) {
    if (g.vertex_count() != vertex_count_) throw std::invalid_argument("monomial vertex count mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational InvariantPolynomial::coefficient(const GraphMonomial& g) const {
    const auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::vector<std::size_t>> InvariantPolynomial::homogeneous_multidegree() const {
    std::optional<std::vector<std::size_t>> common;
    for (const auto& [g, c] : terms_) {
        auto d = g.degrees();
        if (!common)
            common = std::move(d);
        else if (*common != d)
            return std::nullopt;
    }
    return common;
}

InvariantPolynomial operator+(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    if (a.vertex_count_ != b.vertex_count_) throw std::invalid_argument("polynomial vertex count mismatch");
    InvariantPolynomial r = a;
    for (const auto& [g, c] : b.terms_) r.add_term(g, c);
    return r;
}

InvariantPolynomial operator-(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    return a + Rational(-1) * b;
}

InvariantPolynomial operator*(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    if (a.vertex_count_ != b.vertex_count_) throw std::invalid_argument("polynomial vertex count mismatch");
    InvariantPolynomial r(a.vertex_count_);
    for (const auto& [ga, ca] : a.terms_)
        for (const auto& [gb, cb] : b.terms_) r.add_term(ga + gb, ca * cb);
    return r;
}

InvariantPolynomial operator*(const Rational& s, const InvariantPolynomial& p) {
    InvariantPolynomial r(p.vertex_count_);
    for (const auto& [g, c] : p.terms_) r.add_term(g, s * c);
    return r;
}

Rational eval_monomial(const GraphMonomial& g, const SymmetricMatrix& m) {
    if (g.vertex_count() != m.size()) throw std::invalid_argument("graph and matrix sizes differ");
    Rational value(1);
    for (const auto& e : g.edges()) {
        const Rational& x = m.entry(e.u, e.v);
        if (x.is_zero()) return Rational(0);
        value *= x;
    }
    return value;
}

Rational evaluate(const InvariantPolynomial& p, const SymmetricMatrix& m) {
    if (p.vertex_count() != m.size()) throw std::invalid_argument("polynomial and matrix sizes differ");
    Rational total;
    for (const auto& [g, c] : p.terms()) total += c * eval_monomial(g, m);
    return total;
}

std::vector<std::size_t> multidegree(const GraphMonomial& g) { return g.degrees(); }

bool is_torus_invariant(const GraphMonomial& g) {
    const auto d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

InvariantPolynomial det_in_class_basis(std::size_t m, const EnumerationCaps& caps) {
    std::vector<std::pair<Rational, GraphMonomial>> terms;
    for (auto& cls : enumerate_determinantal_classes(m, caps))
        terms.emplace_back(Rational(cls.determinant_coefficient()), std::move(cls.graph));
    return InvariantPolynomial(m, terms);
}

InvariantPolynomial minor_polynomial(std::size_t m, std::span<const std::size_t> rows,
                                     std::span<const std::size_t> cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor index lists differ in length");
    if (rows.size() > 8) throw std::invalid_argument("minor expansion is limited to size 8");
    for (auto idx : {rows, cols})
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] >= m) throw std::out_of_range("minor index out of range");
            if (k > 0 && idx[k] <= idx[k - 1]) throw std::invalid_argument("minor indices must be strictly increasing");
        }
    const std::size_t k = rows.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Rational, GraphMonomial>> terms;
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::vector<Edge> edges;
        edges.reserve(k);
        for (std::size_t a = 0; a < k; ++a) edges.push_back(Edge::make(rows[a], cols[perm[a]]));
        terms.emplace_back(Rational(inversions % 2 == 0 ? 1 : -1), GraphMonomial(m, std::move(edges)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return InvariantPolynomial(m, terms);
}

KernelTestResult kernel_membership_test(const InvariantPolynomial& p, std::size_t n, std::size_t trials,
                                        std::uint64_t seed) {
    return kernel_membership_test(p, SymmetricMatrix::identity(n + 1), trials, seed);
}

KernelTestResult kernel_membership_test(const InvariantPolynomial& p, const SymmetricMatrix& form,
                                        std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("kernel membership test needs at least one trial");
    const std::size_t dim = form.size();
    const std::size_t m = p.vertex_count();
    const Matrix f = form.to_matrix();
    KernelTestResult result;
    for (std::size_t t = 0; t < trials; ++t) {
        // mt19937_64 output is fully specified, unlike the std distributions.
        std::mt19937_64 rng(seed + t);
        constexpr std::uint64_t span = (std::uint64_t{1} << 21) + 1;
        Matrix b(dim, m);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < m; ++j)
                b(i, j) = static_cast<long>(rng() % span) - (1L << 20);
        const SymmetricMatrix gram = SymmetricMatrix::from_matrix(b.transpose() * f * b);
        ++result.trials_run;
        const Rational value = evaluate(p, gram);
        if (!value.is_zero()) {
            result.member = false;
            result.witness = gram;
            result.witness_value = value;
            break;
        }
    }
    return result;
}

std::vector<InvariantPolynomial> naive_linear_relations(std::size_t m) {
    if (m < 2) throw std::invalid_argument("naive relations need m >= 2");
    std::vector<InvariantPolynomial> relations;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < m; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            const auto entry = InvariantPolynomial::monomial(GraphMonomial(m, {Edge::make(i, j)}));
            relations.push_back(entry * minor_polynomial(m, rows, cols));
        }
    }
    return relations;
}

std::size_t span_rank(const std::vector<InvariantPolynomial>& polys) {
    std::map<GraphMonomial, std::size_t> basis;
    for (const auto& p : polys)
        for (const auto& [g, c] : p.terms()) basis.try_emplace(g, 0);
    std::size_t col = 0;
    for (auto& [g, idx] : basis) idx = col++;
    Matrix coeffs(polys.size(), basis.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [g, c] : polys[r].terms()) coeffs(r, basis.at(g)) = c;
    return rank(coeffs);
}

}  // namespace orthoconf
