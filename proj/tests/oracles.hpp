#pragma once

// Slow, independent reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orthoconf/graph.hpp"
#include "orthoconf/matrix.hpp"
#include "orthoconf/rational.hpp"

namespace oracle {

using orthoconf::Matrix;
using orthoconf::Rational;
using orthoconf::SymmetricMatrix;

inline Matrix dense(const SymmetricMatrix& s) {
    Matrix m(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) m(i, j) = s.entry(i, j);
    return m;
}

// Cofactor expansion along the first row.
inline Rational laplace_det(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Rational(1);
    if (n == 1) return a[0][0];
    Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<std::vector<Rational>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            sub.push_back(row);
        }
        const Rational term = a[0][c] * laplace_det(sub);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline Rational laplace_det(const Matrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    return laplace_det(a);
}

inline Rational laplace_minor(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    std::vector<std::vector<Rational>> a;
    for (auto r : rows) {
        std::vector<Rational> row;
        for (auto c : cols) row.push_back(m(r, c));
        a.push_back(row);
    }
    return laplace_det(a);
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Matrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
        for (const auto& rows : subsets_of_size(m.rows(), k))
            for (const auto& cols : subsets_of_size(m.cols(), k))
                if (!laplace_minor(m, rows, cols).is_zero()) return k;
    return 0;
}

// Some permutation with prod M(sigma(i), i) != 0.
inline bool has_nonzero_term(const SymmetricMatrix& m) {
    std::vector<std::size_t> p(m.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) ok = !m.entry(p[i], i).is_zero();
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// max |I| + |J| over nonempty I subset J with a zero block, by walking all
// 3^m assignments (outside, J only, I and J).
inline std::size_t brute_m_prime(const SymmetricMatrix& m) {
    const std::size_t n = m.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::size_t best = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> tag(n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) tag[i] = static_cast<int>(c % 3);
        std::size_t in_i = 0, in_j = 0;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (tag[a] == 2) ++in_i;
            if (tag[a] >= 1) ++in_j;
            if (tag[a] != 2) continue;
            for (std::size_t b = 0; b < n && ok; ++b)
                if (tag[b] >= 1 && !m.entry(a, b).is_zero()) ok = false;
        }
        if (ok && in_i > 0) best = std::max(best, in_i + in_j);
    }
    return best;
}

// Edge multiset {sigma(i), i} of each permutation, grouped; the map value
// is the summed sign, i.e. the coefficient of that monomial in det X.
inline std::map<std::vector<std::pair<std::size_t, std::size_t>>, long> permutation_classes(std::size_t m) {
    std::map<std::vector<std::pair<std::size_t, std::size_t>>, long> classes;
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < m; ++i) {
            edges.emplace_back(std::min(p[i], i), std::max(p[i], i));
            for (std::size_t j = i + 1; j < m; ++j)
                if (p[i] > p[j]) ++inversions;
        }
        std::sort(edges.begin(), edges.end());
        classes[edges] += inversions % 2 == 0 ? 1 : -1;
    } while (std::next_permutation(p.begin(), p.end()));
    return classes;
}

// Symmetric nonnegative integer matrices with 2 x_ii + sum_{j != i} x_ij = 2d
// for every row: the multigraph adjacency matrices of 2d-regular graphs.
inline std::size_t count_regular_adjacency(std::size_t m, std::size_t d) {
    std::vector<std::vector<long>> x(m, std::vector<long>(m, 0));
    std::vector<long> residual(m, static_cast<long>(2 * d));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) cells.emplace_back(i, j);
    std::size_t count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            if (std::all_of(residual.begin(), residual.end(), [](long r) { return r == 0; })) ++count;
            return;
        }
        const auto [i, j] = cells[k];
        // Row i is complete after its last cell (i, m-1).
        const long step = i == j ? 2 : 1;
        for (long v = 0; residual[i] - step * v >= 0 && (i == j || residual[j] - v >= 0); ++v) {
            residual[i] -= step * v;
            if (i != j) residual[j] -= v;
            if (j + 1 < m || residual[i] == 0) self(self, k + 1);
            residual[i] += step * v;
            if (i != j) residual[j] += v;
        }
    };
    rec(rec, 0);
    return count;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * num_bound + 1)) - num_bound;
    const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den_bound));
    return Rational(orthoconf::Integer(num), orthoconf::Integer(den));
}

// Random symmetric matrix with the given 0/1 support: nonzero entries drawn
// from {1, ..., 5}.
inline SymmetricMatrix with_support(const std::vector<std::vector<bool>>& support, std::mt19937_64& rng) {
    const std::size_t m = support.size();
    return SymmetricMatrix(m, [&](std::size_t i, std::size_t j) {
        return support[i][j] ? Rational(static_cast<long>(1 + rng() % 5)) : Rational(0);
    });
}

// Support pattern from the bits of `code` over the upper triangle.
inline std::vector<std::vector<bool>> pattern_from_code(std::size_t m, std::uint64_t code) {
    std::vector<std::vector<bool>> s(m, std::vector<bool>(m, false));
    std::size_t bit = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j, ++bit) s[i][j] = s[j][i] = ((code >> bit) & 1U) != 0;
    return s;
}

}  // namespace oracle
