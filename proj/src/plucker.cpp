#include <stdexcept>
#include <vector>

#include "orthoconf/invariants.hpp"
#include "orthoconf/linalg.hpp"

namespace orthoconf {

namespace {

void check_subset(const PointConfiguration& config, std::span<const std::size_t> subset, std::size_t expected) {
    if (subset.size() != expected)
        throw std::invalid_argument("Pluecker subset must have " + std::to_string(expected) + " indices");
    for (auto i : subset)
        if (i >= config.size()) throw std::out_of_range("Pluecker index out of range");
}

}  // namespace

Rational plucker_bracket(const PointConfiguration& config, std::span<const std::size_t> subset) {
    check_subset(config, subset, config.dimension() + 1);
    std::vector<Vector> columns;
    columns.reserve(subset.size());
    for (auto i : subset) columns.push_back(config[i]);
    return determinant(Matrix::from_columns(columns));
}

Rational plucker_product_relation(const PointConfiguration& config, std::span<const std::size_t> i_subset,
                                  std::span<const std::size_t> j_subset) {
    check_subset(config, i_subset, config.dimension() + 1);
    check_subset(config, j_subset, config.dimension() + 1);
    const std::size_t k = i_subset.size();
    Matrix pairings(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) pairings(a, b) = config.pairing(i_subset[a], j_subset[b]);
    return determinant(pairings) -
           determinant(config.form()) * plucker_bracket(config, i_subset) * plucker_bracket(config, j_subset);
}

Rational plucker_linear_relation_check(const PointConfiguration& config, std::span<const std::size_t> subset,
                                       std::size_t k) {
    check_subset(config, subset, config.dimension() + 2);
    if (k >= config.size()) throw std::out_of_range("pairing index out of range");
    Rational total;
    std::vector<std::size_t> rest(subset.size() - 1);
    for (std::size_t j = 0; j < subset.size(); ++j) {
        for (std::size_t a = 0, t = 0; a < subset.size(); ++a)
            if (a != j) rest[t++] = subset[a];
        // 1-based exponent j + 1
        const Rational term = plucker_bracket(config, rest) * config.pairing(subset[j], k);
        total += (j % 2 == 1) ? term : -term;
    }
    return total;
}

}  // namespace orthoconf
