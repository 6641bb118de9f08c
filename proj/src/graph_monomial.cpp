#include "orthoconf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orthoconf {

GraphMonomial::GraphMonomial(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw std::invalid_argument("edge endpoint out of range");
        e = Edge::make(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
}

GraphMonomial GraphMonomial::all_loops(std::size_t vertex_count) {
    std::vector<Edge> edges;
    edges.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) edges.push_back({i, i});
    return GraphMonomial(vertex_count, std::move(edges));
}

std::size_t GraphMonomial::degree(std::size_t vertex) const {
    std::size_t d = 0;
    for (const auto& e : edges_) {
        if (e.u == vertex) ++d;
        if (e.v == vertex) ++d;
    }
    return d;
}

std::vector<std::size_t> GraphMonomial::degrees() const {
    std::vector<std::size_t> d(vertex_count_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::size_t GraphMonomial::multiplicity(const Edge& e) const {
    const Edge key = Edge::make(e.u, e.v);
    const auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
    return static_cast<std::size_t>(hi - lo);
}

std::optional<std::size_t> GraphMonomial::valency() const {
    const auto d = degrees();
    if (d.empty()) return std::nullopt;
    if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end()) return std::nullopt;
    return d.front();
}

bool GraphMonomial::contains(const GraphMonomial& sub) const {
    return sub.vertex_count_ == vertex_count_ &&
           std::includes(edges_.begin(), edges_.end(), sub.edges_.begin(), sub.edges_.end());
}

GraphMonomial GraphMonomial::minus(const GraphMonomial& sub) const {
    if (!contains(sub)) throw std::invalid_argument("graph does not contain the subtracted multigraph");
    std::vector<Edge> rest;
    std::set_difference(edges_.begin(), edges_.end(), sub.edges_.begin(), sub.edges_.end(), std::back_inserter(rest));
    return GraphMonomial(vertex_count_, std::move(rest));
}

bool GraphMonomial::shares_edge_with(const GraphMonomial& other) const {
    auto a = edges_.begin();
    auto b = other.edges_.begin();
    while (a != edges_.end() && b != other.edges_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

GraphMonomial operator+(const GraphMonomial& a, const GraphMonomial& b) {
    if (a.vertex_count_ != b.vertex_count_) throw std::invalid_argument("vertex counts differ");
    std::vector<Edge> merged;
    merged.reserve(a.edges_.size() + b.edges_.size());
    std::merge(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), std::back_inserter(merged));
    GraphMonomial g;
    g.vertex_count_ = a.vertex_count_;
    g.edges_ = std::move(merged);
    return g;
}

Integer DeterminantalClass::permutation_count() const {
    Integer c = 1;
    c <<= static_cast<mp_bitcnt_t>(long_cycle_count);
    return c;
}

Integer DeterminantalClass::determinant_coefficient() const { return sign * permutation_count(); }

DeterminantalClass determinantal_class(const GraphMonomial& g) {
    if (!g.is_two_regular()) throw std::invalid_argument("determinantal class needs a 2-regular graph");
    const std::size_t m = g.vertex_count();

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);

    std::vector<std::size_t> component_size(m, 0);
    for (std::size_t v = 0; v < m; ++v) ++component_size[find(v)];

    DeterminantalClass cls{g, 1, 0, 0};
    for (std::size_t v = 0; v < m; ++v) {
        if (find(v) != v) continue;
        ++cls.cycle_count;
        // In a 2-regular multigraph a component on k vertices is a k-cycle
        // (k = 1 a loop, k = 2 a double edge).
        if (component_size[v] >= 3) ++cls.long_cycle_count;
    }
    cls.sign = ((m - cls.cycle_count) % 2 == 0) ? 1 : -1;
    return cls;
}

}  // namespace orthoconf
