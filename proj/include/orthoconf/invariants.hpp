#pragma once

#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "orthoconf/configuration.hpp"
#include "orthoconf/graph.hpp"
#include "orthoconf/matrix.hpp"

namespace orthoconf {

// Linear combination of graph monomials on a fixed vertex count; like terms
// are combined and zero coefficients dropped on construction.
class InvariantPolynomial {
public:
    using Terms = std::map<GraphMonomial, Rational>;

    explicit InvariantPolynomial(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}
    // Throws std::invalid_argument if a monomial has a different vertex count.
    InvariantPolynomial(std::size_t vertex_count, const std::vector<std::pair<Rational, GraphMonomial>>& terms);

    static InvariantPolynomial monomial(const GraphMonomial& g, const Rational& coeff = 1);

    std::size_t vertex_count() const { return vertex_count_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const GraphMonomial& g) const;

    // Common multidegree of all terms, if they share one.
    std::optional<std::vector<std::size_t>> homogeneous_multidegree() const;

    friend InvariantPolynomial operator+(const InvariantPolynomial& a, const InvariantPolynomial& b);
    friend InvariantPolynomial operator-(const InvariantPolynomial& a, const InvariantPolynomial& b);
    friend InvariantPolynomial operator*(const InvariantPolynomial& a, const InvariantPolynomial& b);
    friend InvariantPolynomial operator*(const Rational& s, const InvariantPolynomial& p);

    friend bool operator==(const InvariantPolynomial&, const InvariantPolynomial&) = default;

private:
    void add_term(const GraphMonomial& g, const Rational& coeff);

    std::size_t vertex_count_ = 0;
    Terms terms_;
};

// Product of M(u, v) over the edges of g. Throws std::invalid_argument on a
// size mismatch.
Rational eval_monomial(const GraphMonomial& g, const SymmetricMatrix& m);
Rational evaluate(const InvariantPolynomial& p, const SymmetricMatrix& m);

// Degree of each vertex under X_ij -> z_i z_j X_ij (loops count 2).
std::vector<std::size_t> multidegree(const GraphMonomial& g);
// Invariant under the torus {z_1 ... z_m = 1} iff all vertex degrees agree.
bool is_torus_invariant(const GraphMonomial& g);

// det X as sum over determinantal classes of sign * 2^{long cycles} * graph.
InvariantPolynomial det_in_class_basis(std::size_t m, const EnumerationCaps& caps = {});

// Expansion of det(X[rows, cols]) for a generic symmetric X on m vertices
// (0-based, strictly increasing index lists of equal length <= 8).
InvariantPolynomial minor_polynomial(std::size_t m, std::span<const std::size_t> rows,
                                     std::span<const std::size_t> cols);

struct KernelTestResult {
    bool member = true;
    std::size_t trials_run = 0;
    // First sampled Gram matrix on which the polynomial did not vanish.
    std::optional<SymmetricMatrix> witness;
    Rational witness_value;
};

// Randomized test for vanishing on all Gram matrices B^T F B of rank <= n+1,
// with B a random integer (n+1) x m matrix. Trial t is seeded with seed + t.
// A negative answer is a proof; a positive one is probabilistic.
KernelTestResult kernel_membership_test(const InvariantPolynomial& p, std::size_t n, std::size_t trials,
                                        std::uint64_t seed);
KernelTestResult kernel_membership_test(const InvariantPolynomial& p, const SymmetricMatrix& form,
                                        std::size_t trials, std::uint64_t seed);

// X_ij times the expansion of the complementary minor (row i and column j
// removed), for all i <= j. Each vanishes on matrices of rank <= m - 2.
std::vector<InvariantPolynomial> naive_linear_relations(std::size_t m = 4);

// Rank of the coefficient matrix of `polys` over the union of their monomials.
std::size_t span_rank(const std::vector<InvariantPolynomial>& polys);

// det of the columns v_i, i in `subset` (size n+1, in the given order).
Rational plucker_bracket(const PointConfiguration& config, std::span<const std::size_t> subset);

// det(<v_{i_a}, v_{j_b}>) - det(F) p_I p_J; zero for every configuration.
Rational plucker_product_relation(const PointConfiguration& config, std::span<const std::size_t> i_subset,
                                  std::span<const std::size_t> j_subset);

// sum_{j=1}^{n+2} (-1)^j p_{I \ i_j} <v_{i_j}, v_k> over an (n+2)-subset I;
// zero for every configuration.
Rational plucker_linear_relation_check(const PointConfiguration& config, std::span<const std::size_t> subset,
                                       std::size_t k);

}  // namespace orthoconf
