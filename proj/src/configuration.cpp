#include "orthoconf/configuration.hpp"

#include <stdexcept>
#include <utility>

#include "orthoconf/linalg.hpp"

namespace orthoconf {

PointConfiguration::PointConfiguration(SymmetricMatrix form, std::vector<Vector> vectors)
    : form_(std::move(form)), vectors_(std::move(vectors)) {
    if (form_.size() == 0) throw std::invalid_argument("form must have positive size");
    if (determinant(form_).is_zero()) throw std::invalid_argument("form is degenerate");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].size() != form_.size())
            throw std::invalid_argument("vector " + std::to_string(i + 1) + " has the wrong length");
        if (is_zero(vectors_[i])) throw std::invalid_argument("vector " + std::to_string(i + 1) + " is zero");
    }
}

PointConfiguration PointConfiguration::euclidean(std::vector<Vector> vectors) {
    if (vectors.empty()) throw std::invalid_argument("euclidean configuration needs at least one vector");
    const std::size_t dim = vectors.front().size();
    return PointConfiguration(SymmetricMatrix::identity(dim), std::move(vectors));
}

Rational PointConfiguration::pairing(std::size_t i, std::size_t j) const {
    return bilinear(form_, vectors_.at(i), vectors_.at(j));
}

PointConfiguration PointConfiguration::transformed(const Matrix& a) const {
    std::vector<Vector> moved;
    moved.reserve(vectors_.size());
    for (const auto& v : vectors_) moved.push_back(a * v);
    return PointConfiguration(form_, std::move(moved));
}

SymmetricMatrix gram_matrix(const PointConfiguration& config) {
    return SymmetricMatrix(config.size(), [&](std::size_t i, std::size_t j) { return config.pairing(i, j); });
}

}  // namespace orthoconf
