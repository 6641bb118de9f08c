#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "orthoconf/configuration.hpp"
#include "orthoconf/matrix.hpp"

namespace orthoconf {

enum class Stability { stable, strictly_semistable, unstable };

std::string_view to_string(Stability s);

// sigma[i] is the row paired with column i: prod_i M(sigma[i], i) != 0.
using Permutation = std::vector<std::size_t>;

// I subset of J with M(i, j) = 0 for all i in I, j in J (0-based, sorted).
struct SubsetWitness {
    std::vector<std::size_t> I;
    std::vector<std::size_t> J;

    std::size_t weight() const { return I.size() + J.size(); }
    friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

// Weights r of a one-parameter subgroup t -> (t^{r_1}, ..., t^{r_m}).
using OneParameterSubgroup = std::vector<long>;

struct StabilityVerdict {
    Stability status = Stability::stable;
    std::size_t m_prime = 0;
    // Present exactly when the matrix is semistable.
    std::optional<Permutation> permutation;
    // Present exactly when the matrix is not stable.
    std::optional<SubsetWitness> subsets;
    // Present when not stable and m >= 2.
    std::optional<OneParameterSubgroup> one_ps;
};

struct MPrime {
    std::size_t value = 0;
    std::optional<SubsetWitness> witness;
};

struct StabilityCaps {
    std::size_t max_vertices = 16;
};

// Perfect matching in the bipartite support graph {(i, j) : M(i, j) != 0},
// found by augmenting paths.
std::optional<Permutation> semistable_witness(const SymmetricMatrix& m);

// max |I| + |J| over nonempty I subset J with a zero block on I x J, with the
// lexicographically smallest maximizing (I, J). Exhaustive over subsets I;
// throws CapExceeded above caps.max_vertices.
MPrime m_prime(const SymmetricMatrix& m, const StabilityCaps& caps = {});

// unstable iff m' >= m + 1, strictly semistable iff m' = m, stable otherwise.
// Throws std::logic_error if the matching and subset criteria disagree.
StabilityVerdict classify(const SymmetricMatrix& m, const StabilityCaps& caps = {});
StabilityVerdict classify(const PointConfiguration& config, const StabilityCaps& caps = {});

// Checks every witness in the verdict against the matrix.
bool witnesses_hold(const SymmetricMatrix& m, const StabilityVerdict& verdict);

struct OracleCaps {
    std::size_t max_vertices = 6;
    long max_weight = 3;
};

struct OracleVerdict {
    Stability status = Stability::stable;
    std::optional<OneParameterSubgroup> weights;
};

// Hilbert-Mumford brute force over integer weights |r_i| <= weight_bound,
// sum r_i = 0, r != 0: unstable if some r has r_i + r_j > 0 on the whole
// support, not stable if some r has r_i + r_j >= 0 there.
OracleVerdict one_ps_oracle(const SymmetricMatrix& m, long weight_bound, const OracleCaps& caps = {});

}  // namespace orthoconf
