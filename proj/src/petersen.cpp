#include <algorithm>
#include <stdexcept>
#include <utility>

#include "orthoconf/graph.hpp"

namespace orthoconf {

namespace {

struct Arc {
    std::size_t tail;
    std::size_t head;
};

// Walks closed trails (Hierholzer) over an even-degree multigraph given as
// endpoint pairs, calling visit(edge, from, to) once per edge in traversal
// direction. Loops appear once in the adjacency of their vertex.
template <typename Visit>
void walk_closed_trails(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& ends,
                        Visit&& visit) {
    std::vector<std::vector<std::size_t>> adj(vertex_count);
    for (std::size_t e = 0; e < ends.size(); ++e) {
        adj[ends[e].first].push_back(e);
        if (ends[e].second != ends[e].first) adj[ends[e].second].push_back(e);
    }
    std::vector<bool> used(ends.size(), false);
    std::vector<std::size_t> next(vertex_count, 0);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < vertex_count; ++s) {
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            while (next[v] < adj[v].size() && used[adj[v][next[v]]]) ++next[v];
            if (next[v] == adj[v].size()) {
                stack.pop_back();
                continue;
            }
            const std::size_t e = adj[v][next[v]];
            used[e] = true;
            const std::size_t w = ends[e].first == v ? ends[e].second : ends[e].first;
            visit(e, v, w);
            stack.push_back(w);
        }
    }
}

// Perfect matching in a regular bipartite multigraph (tails on the left,
// heads on the right) by augmenting paths.
std::vector<std::size_t> perfect_matching(std::size_t n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t a = 0; a < arcs.size(); ++a) out[arcs[a].tail].push_back(a);
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> matched_arc(n, none);  // by head
    std::vector<bool> seen(n);

    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t a : out[u]) {
            const std::size_t h = arcs[a].head;
            if (seen[h]) continue;
            seen[h] = true;
            if (matched_arc[h] == none || self(self, arcs[matched_arc[h]].tail)) {
                matched_arc[h] = a;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        std::fill(seen.begin(), seen.end(), false);
        if (!augment(augment, u)) throw std::logic_error("regular bipartite multigraph without a perfect matching");
    }
    return matched_arc;
}

// Splits a d-regular bipartite multigraph into d perfect matchings: halve by
// alternating colors along closed trails when d is even, peel one matching
// when d is odd.
void split_into_matchings(std::size_t n, std::vector<Arc> arcs, std::size_t d, std::vector<std::vector<Arc>>& out) {
    if (d == 0) return;
    if (d == 1) {
        out.push_back(std::move(arcs));
        return;
    }
    if (d % 2 == 1) {
        const auto matching = perfect_matching(n, arcs);
        std::vector<bool> taken(arcs.size(), false);
        std::vector<Arc> factor;
        for (std::size_t a : matching) {
            taken[a] = true;
            factor.push_back(arcs[a]);
        }
        out.push_back(std::move(factor));
        std::vector<Arc> rest;
        for (std::size_t a = 0; a < arcs.size(); ++a)
            if (!taken[a]) rest.push_back(arcs[a]);
        split_into_matchings(n, std::move(rest), d - 1, out);
        return;
    }
    // Left vertex v is node v, right vertex v is node n + v. Bipartite closed
    // trails alternate sides, so left-to-right steps and right-to-left steps
    // each cover half of every vertex's edges.
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    ends.reserve(arcs.size());
    for (const auto& a : arcs) ends.emplace_back(a.tail, n + a.head);
    std::vector<Arc> forward, backward;
    walk_closed_trails(2 * n, ends, [&](std::size_t e, std::size_t from, std::size_t) {
        (from < n ? forward : backward).push_back(arcs[e]);
    });
    split_into_matchings(n, std::move(forward), d / 2, out);
    split_into_matchings(n, std::move(backward), d / 2, out);
}

}  // namespace

std::vector<GraphMonomial> petersen_2_factorization(const GraphMonomial& g) {
    const auto valency = g.valency();
    if (!valency || *valency % 2 != 0)
        throw std::invalid_argument("2-factorization needs a regular multigraph of even valency");
    const std::size_t n = g.vertex_count();
    const std::size_t d = *valency / 2;

    // Orient along closed trails so every vertex has in-degree = out-degree = d.
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    ends.reserve(g.edge_count());
    for (const auto& e : g.edges()) ends.emplace_back(e.u, e.v);
    std::vector<Arc> arcs(ends.size());
    walk_closed_trails(n, ends, [&](std::size_t e, std::size_t from, std::size_t to) { arcs[e] = {from, to}; });
    for (std::size_t v = 0; v < n; ++v) {
        const auto outdeg = std::count_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.tail == v; });
        if (static_cast<std::size_t>(outdeg) != d) throw std::logic_error("unbalanced Euler orientation");
    }

    std::vector<std::vector<Arc>> matchings;
    split_into_matchings(n, std::move(arcs), d, matchings);

    std::vector<GraphMonomial> factors;
    factors.reserve(matchings.size());
    for (const auto& m : matchings) {
        std::vector<Edge> edges;
        edges.reserve(m.size());
        for (const auto& a : m) edges.push_back(Edge::make(a.tail, a.head));
        factors.emplace_back(n, std::move(edges));
        if (!factors.back().is_two_regular()) throw std::logic_error("2-factor is not 2-regular");
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

GraphMonomial factor_avoiding(const GraphMonomial& g, const GraphMonomial& avoid) {
    const auto valency = g.valency();
    if (!valency || *valency == 0 || *valency % 2 != 0)
        throw std::invalid_argument("factor_avoiding needs a regular multigraph of positive even valency");
    if (!g.contains(avoid)) throw std::invalid_argument("avoided multigraph is not a sub-multigraph");
    const std::size_t k = *valency / 2;
    if (k <= avoid.edge_count())
        throw std::invalid_argument("factor_avoiding needs more 2-factors than avoided edges");

    // The k factors partition the edge instances; the avoided instances touch
    // at most |avoid| of them, so some factor fits inside g - avoid.
    const GraphMonomial rest = g.minus(avoid);
    for (const auto& f : petersen_2_factorization(g))
        if (rest.contains(f)) return f;
    throw std::logic_error("no 2-factor avoids the given edges");
}

}  // namespace orthoconf
