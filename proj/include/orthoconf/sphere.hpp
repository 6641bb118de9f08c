#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "orthoconf/configuration.hpp"
#include "orthoconf/matrix.hpp"

namespace orthoconf {

// Sum (x_i - a_i x_0)^2 - R^2 x_0^2 = 0 in P^n. R^2 may be zero or negative.
struct Sphere {
    Vector center;
    Rational radius_sq;

    std::size_t ambient_dim() const { return center.size(); }
    friend bool operator==(const Sphere&, const Sphere&) = default;
};

// Projective point alpha = [a_0, ..., a_{n+1}] of P^{n+1}.
class LiftedPoint {
public:
    // Throws std::invalid_argument on fewer than 3 coordinates or the zero vector.
    explicit LiftedPoint(Vector coords);

    const Vector& coords() const { return coords_; }
    std::size_t ambient_dim() const { return coords_.size() - 2; }

    // Equality up to a nonzero scalar.
    bool equivalent(const LiftedPoint& other) const;
    friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;

private:
    Vector coords_;
};

// a_0 = 0: the quadric contains the hyperplane at infinity.
struct AtInfinity {
    LiftedPoint point;
};

using Unlifted = std::variant<Sphere, AtInfinity>;

// Matrix of <a, b> = a_0 b_{n+1} + a_{n+1} b_0 + sum_{i=1}^n a_i b_i. Squares to I.
SymmetricMatrix fundamental_form(std::size_t n);

// Throws std::invalid_argument when the points live in different dimensions.
Rational pairing(const LiftedPoint& a, const LiftedPoint& b);
// q(a) = <a, a> = 2 a_0 a_{n+1} + sum a_i^2.
Rational quadric_value(const LiftedPoint& a);

// (1, a_1, ..., a_n, (R^2 - sum a_i^2) / 2). Throws on n = 0.
LiftedPoint lift(const Sphere& s);
Unlifted unlift(const LiftedPoint& p);

struct Singularity {
    bool singular = false;
    // a_0^{n-1} q(a)
    Rational discriminant;
};

Singularity is_singular(const LiftedPoint& p);

bool are_orthogonal(const LiftedPoint& p, const LiftedPoint& q);

// <p,p><q,q> - <p,q>^2; zero iff the spheres are tangent.
Rational tangency_determinant(const LiftedPoint& p, const LiftedPoint& q);
bool are_tangent(const LiftedPoint& p, const LiftedPoint& q);

struct CommonPoint {
    bool common = false;
    Rational determinant;
    // The polar hyperplanes F v_i are linearly dependent, which forces
    // determinant = 0.
    bool polars_dependent = false;
};

// n+1 spheres in P^n. Evaluates det(h_i^T F h_j) for h_i = F v_i and the Gram
// determinant det(<v_i, v_j>); throws std::logic_error if they differ.
// Throws std::invalid_argument on a wrong count or mixed dimensions.
CommonPoint common_point(std::span<const LiftedPoint> points);

// prod <v_{a_i}, v_{a_{i+1}}> / prod <v_{a_i}, v_{a_i}> with cyclic indices
// (0-based). Throws std::invalid_argument on an empty cycle or a zero
// diagonal pairing, std::out_of_range on a bad index.
Rational cyclic_cosine_invariant(const PointConfiguration& config, std::span<const std::size_t> cycle);

enum class HyperplaneRelation { intersecting, parallel, divergent };

std::string_view to_string(HyperplaneRelation r);

struct HyperbolicPair {
    HyperplaneRelation relation = HyperplaneRelation::intersecting;
    // t^2 for t = -<v, w> after scaling v and w to self-pairing 1.
    Rational t_squared;
    // t itself when it is rational. Representatives are oriented so that
    // their first nonzero coordinate is positive.
    std::optional<Rational> t;
    // |t|: cos of the angle (intersecting) or cosh of the distance (divergent).
    std::optional<Rational> abs_t;
};

class NotNormalizable : public std::invalid_argument {
public:
    NotNormalizable(const std::string& what, Rational self_pairing)
        : std::invalid_argument(what), self_pairing_(std::move(self_pairing)) {}
    const Rational& self_pairing() const { return self_pairing_; }

private:
    Rational self_pairing_;
};

// Throws NotNormalizable when a self-pairing is <= 0.
HyperbolicPair hyperbolic_pair(const LiftedPoint& v, const LiftedPoint& w);

// A with A x_i = y_i and A^T F A = F, built as a product of reflections.
// Returns nullopt when the Gram matrices differ or Y is dependent. Throws
// std::invalid_argument on mismatched shapes or forms, or dependent X.
std::optional<Matrix> recover_isometry(const PointConfiguration& x, const PointConfiguration& y);

}  // namespace orthoconf
