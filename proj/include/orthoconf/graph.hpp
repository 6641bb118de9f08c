#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "orthoconf/rational.hpp"

namespace orthoconf {

// Unordered pair {u, v} with u <= v; u == v is a loop. Vertices are 0-based.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    static Edge make(std::size_t a, std::size_t b) { return a <= b ? Edge{a, b} : Edge{b, a}; }
    bool is_loop() const { return u == v; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Multigraph on labeled vertices, standing for the monomial prod X_{uv} over
// its edges. Canonical form is the sorted edge multiset. Loops add 2 to the
// degree of their vertex.
class GraphMonomial {
public:
    GraphMonomial() = default;
    // Throws std::invalid_argument if an endpoint is out of range.
    GraphMonomial(std::size_t vertex_count, std::vector<Edge> edges);

    // One loop at every vertex (the diagonal term).
    static GraphMonomial all_loops(std::size_t vertex_count);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::size_t degree(std::size_t vertex) const;
    std::vector<std::size_t> degrees() const;
    std::size_t multiplicity(const Edge& e) const;

    // Common degree when the graph is regular.
    std::optional<std::size_t> valency() const;
    bool is_two_regular() const { return valency() == std::size_t{2}; }

    // Multiset inclusion.
    bool contains(const GraphMonomial& sub) const;
    // Multiset difference; throws std::invalid_argument unless contains(sub).
    GraphMonomial minus(const GraphMonomial& sub) const;
    bool shares_edge_with(const GraphMonomial& other) const;

    // Multiset union (product of monomials).
    friend GraphMonomial operator+(const GraphMonomial& a, const GraphMonomial& b);

    friend bool operator==(const GraphMonomial&, const GraphMonomial&) = default;
    friend auto operator<=>(const GraphMonomial&, const GraphMonomial&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// A 2-regular multigraph together with the shared sign of the 2^k
// permutations it represents (k = number of cycles of length >= 3).
struct DeterminantalClass {
    GraphMonomial graph;
    int sign = 1;
    std::size_t cycle_count = 0;
    std::size_t long_cycle_count = 0;

    Integer permutation_count() const;
    // sign * 2^{long_cycle_count}: the coefficient of the class in det X.
    Integer determinant_coefficient() const;
};

// Throws std::invalid_argument unless g is 2-regular.
DeterminantalClass determinantal_class(const GraphMonomial& g);

struct EnumerationCaps {
    // k(10) is about 1.4 million classes.
    std::size_t max_class_vertices = 10;
    std::size_t max_regular_vertices = 6;
    std::size_t max_regular_half_valency = 3;
};

// All 2-regular multigraphs on m labeled vertices, in canonical order.
// Throws CapExceeded when m exceeds caps.max_class_vertices.
std::vector<DeterminantalClass> enumerate_determinantal_classes(std::size_t m, const EnumerationCaps& caps = {});

// All multigraphs on m labeled vertices with every degree equal to 2d, in
// canonical order. For d = 1 the class cap applies instead of the regular
// caps, since the result is the same set as the determinantal classes.
std::vector<GraphMonomial> enumerate_regular_multigraphs(std::size_t m, std::size_t half_valency,
                                                         const EnumerationCaps& caps = {});

// k(1..max_m) read off e^{t/2 + t^2/4} / sqrt(1 - t) as m! [t^m].
// Throws std::invalid_argument for max_m > 30.
std::vector<Integer> km_from_generating_function(std::size_t max_m);

// Splits a 2d-regular multigraph into d edge-disjoint 2-factors whose union
// is the input. Throws std::invalid_argument if g is not regular of even
// valency.
std::vector<GraphMonomial> petersen_2_factorization(const GraphMonomial& g);

// A 2-factor of g sharing no edge (counted with multiplicity) with `avoid`.
// Requires g regular of valency 2k, avoid a sub-multigraph of g, and
// k > avoid.edge_count(); throws std::invalid_argument otherwise.
GraphMonomial factor_avoiding(const GraphMonomial& g, const GraphMonomial& avoid);

}  // namespace orthoconf
