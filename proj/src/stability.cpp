#include "orthoconf/stability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "orthoconf/errors.hpp"

namespace orthoconf {

namespace {

std::vector<std::size_t> bits_of(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U)
        if (mask & 1U) out.push_back(i);
    return out;
}

// I -> -(|J| - 1), J \ I -> 1, rest -> |J|; requires |I| + |J| = m + 1.
OneParameterSubgroup unstable_weights(std::size_t m, const SubsetWitness& w) {
    const long j_size = static_cast<long>(w.J.size());
    OneParameterSubgroup r(m, j_size);
    for (auto j : w.J) r[j] = 1;
    for (auto i : w.I) r[i] = -(j_size - 1);
    return r;
}

// I -> -1, J \ I -> 0, rest -> +1; requires |I| + |J| = m.
OneParameterSubgroup semistable_weights(std::size_t m, const SubsetWitness& w) {
    OneParameterSubgroup r(m, 1);
    for (auto j : w.J) r[j] = 0;
    for (auto i : w.I) r[i] = -1;
    return r;
}

// Shrinks a zero-block pair to total size exactly `target`, dropping the
// largest index of J \ I, or failing that the largest index of I (which
// then stays in J).
SubsetWitness shrink(SubsetWitness w, std::size_t target) {
    while (w.weight() > target) {
        std::vector<std::size_t> outside;
        std::set_difference(w.J.begin(), w.J.end(), w.I.begin(), w.I.end(), std::back_inserter(outside));
        if (!outside.empty())
            w.J.erase(std::find(w.J.begin(), w.J.end(), outside.back()));
        else
            w.I.pop_back();
    }
    return w;
}

}  // namespace

std::string_view to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::strictly_semistable: return "strictly_semistable";
        case Stability::unstable: return "unstable";
    }
    return "unknown";
}

std::optional<Permutation> semistable_witness(const SymmetricMatrix& m) {
    const std::size_t n = m.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> row_of_col(n, none);
    std::vector<bool> seen(n);

    auto augment = [&](auto&& self, std::size_t row) -> bool {
        for (std::size_t col = 0; col < n; ++col) {
            if (m.entry(row, col).is_zero() || seen[col]) continue;
            seen[col] = true;
            if (row_of_col[col] == none || self(self, row_of_col[col])) {
                row_of_col[col] = row;
                return true;
            }
        }
        return false;
    };
    for (std::size_t row = 0; row < n; ++row) {
        std::fill(seen.begin(), seen.end(), false);
        if (!augment(augment, row)) return std::nullopt;
    }
    return row_of_col;
}

MPrime m_prime(const SymmetricMatrix& m, const StabilityCaps& caps) {
    const std::size_t n = m.size();
    if (n > caps.max_vertices || n > 31)
        throw CapExceeded("subset search: m = " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(std::min<std::size_t>(caps.max_vertices, 31)));
    std::vector<std::uint32_t> zero_cols(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.entry(i, j).is_zero()) zero_cols[i] |= 1U << j;

    // common[I] = columns zero in every row of I.
    const std::uint32_t full = n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<std::uint32_t> common(std::size_t{1} << n);
    common[0] = full;
    MPrime best;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const std::uint32_t low = mask & (~mask + 1U);
        common[mask] = common[mask ^ low] & zero_cols[static_cast<std::size_t>(std::countr_zero(low))];
        const std::uint32_t j_mask = common[mask];
        if ((mask & ~j_mask) != 0) continue;
        const std::size_t value =
            static_cast<std::size_t>(std::popcount(mask)) + static_cast<std::size_t>(std::popcount(j_mask));
        if (value < best.value) continue;
        if (value == best.value && best.witness && !(bits_of(mask) < best.witness->I)) continue;
        best.value = value;
        best.witness = SubsetWitness{bits_of(mask), bits_of(j_mask)};
    }
    return best;
}

StabilityVerdict classify(const SymmetricMatrix& m, const StabilityCaps& caps) {
    const std::size_t n = m.size();
    const MPrime mp = m_prime(m, caps);
    StabilityVerdict v;
    v.m_prime = mp.value;
    v.permutation = semistable_witness(m);
    if (mp.value >= n + 1) {
        v.status = Stability::unstable;
        v.subsets = mp.witness;
        if (n >= 2) v.one_ps = unstable_weights(n, shrink(*mp.witness, n + 1));
        if (v.permutation) throw std::logic_error("unstable matrix with a nonvanishing determinantal term");
    } else if (mp.value == n) {
        v.status = Stability::strictly_semistable;
        v.subsets = mp.witness;
        v.one_ps = semistable_weights(n, *mp.witness);
        if (!v.permutation) throw std::logic_error("strictly semistable matrix without a nonvanishing term");
    } else {
        v.status = Stability::stable;
        if (!v.permutation) throw std::logic_error("stable matrix without a nonvanishing determinantal term");
    }
    return v;
}

StabilityVerdict classify(const PointConfiguration& config, const StabilityCaps& caps) {
    return classify(gram_matrix(config), caps);
}

bool witnesses_hold(const SymmetricMatrix& m, const StabilityVerdict& verdict) {
    const std::size_t n = m.size();
    const bool semistable = verdict.status != Stability::unstable;
    if (semistable != verdict.permutation.has_value()) return false;
    if (verdict.permutation) {
        const auto& sigma = *verdict.permutation;
        if (sigma.size() != n) return false;
        std::vector<bool> hit(n, false);
        for (std::size_t col = 0; col < n; ++col) {
            if (sigma[col] >= n || hit[sigma[col]]) return false;
            hit[sigma[col]] = true;
            if (m.entry(sigma[col], col).is_zero()) return false;
        }
    }
    const bool stable = verdict.status == Stability::stable;
    if (stable == verdict.subsets.has_value()) return false;
    if (verdict.subsets) {
        const auto& [I, J] = *verdict.subsets;
        if (I.empty() || !std::is_sorted(I.begin(), I.end()) || !std::is_sorted(J.begin(), J.end())) return false;
        if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) return false;
        for (auto i : I)
            for (auto j : J)
                if (j >= n || !m.entry(i, j).is_zero()) return false;
        if (verdict.subsets->weight() != verdict.m_prime) return false;
        if (verdict.status == Stability::unstable && verdict.m_prime < n + 1) return false;
        if (verdict.status == Stability::strictly_semistable && verdict.m_prime != n) return false;
    }
    if (verdict.one_ps) {
        const auto& r = *verdict.one_ps;
        if (r.size() != n || stable) return false;
        long sum = 0;
        bool nonzero = false;
        for (long x : r) {
            sum += x;
            nonzero = nonzero || x != 0;
        }
        if (sum != 0 || !nonzero) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (m.entry(i, j).is_zero()) continue;
                const long s = r[i] + r[j];
                if (verdict.status == Stability::unstable ? s <= 0 : s < 0) return false;
            }
    } else if (!stable && n >= 2) {
        return false;
    }
    return true;
}

OracleVerdict one_ps_oracle(const SymmetricMatrix& m, long weight_bound, const OracleCaps& caps) {
    const std::size_t n = m.size();
    if (n > caps.max_vertices)
        throw CapExceeded("one-ps oracle: m = " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(caps.max_vertices));
    if (weight_bound < 1 || weight_bound > caps.max_weight)
        throw CapExceeded("one-ps oracle: weight bound " + std::to_string(weight_bound) + " outside 1.." +
                          std::to_string(caps.max_weight));

    std::vector<std::pair<std::size_t, std::size_t>> support;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!m.entry(i, j).is_zero()) support.emplace_back(i, j);

    OracleVerdict verdict;
    // SL_1 has no nontrivial one-parameter subgroups; the zero vector is still unstable.
    if (n == 1) {
        if (support.empty()) verdict.status = Stability::unstable;
        return verdict;
    }
    OneParameterSubgroup r(n, -weight_bound);
    while (true) {
        long sum = 0;
        bool nonzero = false;
        for (long x : r) {
            sum += x;
            nonzero = nonzero || x != 0;
        }
        if (sum == 0 && nonzero) {
            long lowest = std::numeric_limits<long>::max();
            for (const auto& [i, j] : support) lowest = std::min(lowest, r[i] + r[j]);
            if (lowest > 0) return {Stability::unstable, r};
            if (lowest >= 0 && verdict.status == Stability::stable) verdict = {Stability::strictly_semistable, r};
        }
        std::size_t k = 0;
        while (k < n && r[k] == weight_bound) r[k++] = -weight_bound;
        if (k == n) break;
        ++r[k];
    }
    return verdict;
}

}  // namespace orthoconf
