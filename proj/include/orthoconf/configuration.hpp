#pragma once

#include <cstddef>
#include <vector>

#include "orthoconf/matrix.hpp"

namespace orthoconf {

// m nonzero vectors in an (n+1)-dimensional space carrying a nondegenerate
// symmetric bilinear form.
class PointConfiguration {
public:
    // Throws std::invalid_argument if the form is degenerate, a vector has the
    // wrong length, or a vector is zero.
    PointConfiguration(SymmetricMatrix form, std::vector<Vector> vectors);

    // Standard dot product on Q^{n+1}.
    static PointConfiguration euclidean(std::vector<Vector> vectors);

    // Projective dimension n (the space has dimension n + 1).
    std::size_t dimension() const { return form_.size() - 1; }
    std::size_t size() const { return vectors_.size(); }

    const SymmetricMatrix& form() const { return form_; }
    const std::vector<Vector>& vectors() const { return vectors_; }
    const Vector& operator[](std::size_t i) const { return vectors_.at(i); }

    Rational pairing(std::size_t i, std::size_t j) const;

    // The configuration (A v_1, ..., A v_m) under the same form.
    PointConfiguration transformed(const Matrix& a) const;

private:
    SymmetricMatrix form_;
    std::vector<Vector> vectors_;
};

// Entry (i, j) is <v_i, v_j>.
SymmetricMatrix gram_matrix(const PointConfiguration& config);

}  // namespace orthoconf
