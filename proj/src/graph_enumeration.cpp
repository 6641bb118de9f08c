#include <algorithm>
#include <stdexcept>
#include <string>

#include "orthoconf/errors.hpp"
#include "orthoconf/graph.hpp"

namespace orthoconf {

namespace {

// Fills the symmetric multiplicity table pair by pair in lexicographic order
// of (i, j), i <= j, tracking the residual degree of every vertex.
class RegularEnumerator {
public:
    RegularEnumerator(std::size_t m, std::size_t degree) : m_(m), residual_(m, degree) {}

    std::vector<GraphMonomial> run() {
        if (m_ > 0) visit(0, 0);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void visit(std::size_t i, std::size_t j) {
        if (i == m_) {
            out_.emplace_back(m_, edges_);
            return;
        }
        if (j == m_) {
            if (residual_[i] == 0) visit(i + 1, i + 1);
            return;
        }
        if (j == i) {
            const std::size_t max_loops = residual_[i] / 2;
            for (std::size_t l = 0; l <= max_loops; ++l) {
                residual_[i] -= 2 * l;
                edges_.insert(edges_.end(), l, Edge{i, i});
                visit(i, i + 1);
                edges_.resize(edges_.size() - l);
                residual_[i] += 2 * l;
            }
            return;
        }
        std::size_t capacity = 0;
        for (std::size_t k = j; k < m_; ++k) capacity += residual_[k];
        if (residual_[i] > capacity) return;
        const std::size_t max_mult = std::min(residual_[i], residual_[j]);
        for (std::size_t x = 0; x <= max_mult; ++x) {
            residual_[i] -= x;
            residual_[j] -= x;
            edges_.insert(edges_.end(), x, Edge{i, j});
            visit(i, j + 1);
            edges_.resize(edges_.size() - x);
            residual_[i] += x;
            residual_[j] += x;
        }
    }

    std::size_t m_;
    std::vector<std::size_t> residual_;
    std::vector<Edge> edges_;
    std::vector<GraphMonomial> out_;
};

void check_vertex_cap(std::size_t m, std::size_t cap, const char* what) {
    if (m > cap)
        throw CapExceeded(std::string(what) + ": m = " + std::to_string(m) + " exceeds the cap " +
                          std::to_string(cap));
}

}  // namespace

std::vector<GraphMonomial> enumerate_regular_multigraphs(std::size_t m, std::size_t half_valency,
                                                         const EnumerationCaps& caps) {
    if (m == 0) throw std::invalid_argument("vertex count must be positive");
    if (half_valency == 0) throw std::invalid_argument("valency must be positive");
    if (half_valency == 1) {
        check_vertex_cap(m, caps.max_class_vertices, "2-regular enumeration");
    } else {
        check_vertex_cap(m, caps.max_regular_vertices, "regular multigraph enumeration");
        if (half_valency > caps.max_regular_half_valency)
            throw CapExceeded("regular multigraph enumeration: d = " + std::to_string(half_valency) +
                              " exceeds the cap " + std::to_string(caps.max_regular_half_valency));
    }
    return RegularEnumerator(m, 2 * half_valency).run();
}

std::vector<DeterminantalClass> enumerate_determinantal_classes(std::size_t m, const EnumerationCaps& caps) {
    if (m == 0) throw std::invalid_argument("vertex count must be positive");
    check_vertex_cap(m, caps.max_class_vertices, "determinantal class enumeration");
    auto graphs = RegularEnumerator(m, 2).run();
    std::vector<DeterminantalClass> classes;
    classes.reserve(graphs.size());
    for (auto& g : graphs) classes.push_back(determinantal_class(g));
    return classes;
}

std::vector<Integer> km_from_generating_function(std::size_t max_m) {
    if (max_m > 30) throw std::invalid_argument("generating function expansion is limited to order 30");
    const std::size_t order = max_m + 1;

    // exp(P) with P = t/2 + t^2/4, from n e_n = sum_k k p_k e_{n-k}.
    const std::vector<Rational> p = {Rational(0), Rational(1, 2), Rational(1, 4)};
    std::vector<Rational> e(order);
    e[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        Rational acc;
        for (std::size_t k = 1; k < p.size() && k <= n; ++k) acc += Rational(k) * p[k] * e[n - k];
        e[n] = acc / Rational(n);
    }

    // (1 - t)^{-1/2} = sum binom(2n, n) / 4^n t^n, via c_n = c_{n-1} (2n - 1) / (2n).
    std::vector<Rational> c(order);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n) c[n] = c[n - 1] * Rational(2 * n - 1) / Rational(2 * n);

    std::vector<Integer> k;
    k.reserve(max_m);
    Integer factorial = 1;
    for (std::size_t n = 1; n <= max_m; ++n) {
        factorial *= static_cast<unsigned long>(n);
        Rational coeff;
        for (std::size_t a = 0; a <= n; ++a) coeff += e[a] * c[n - a];
        const Rational value = coeff * Rational(factorial);
        if (!value.is_integer()) throw std::logic_error("generating function coefficient is not an integer");
        k.push_back(value.numerator());
    }
    return k;
}

}  // namespace orthoconf
