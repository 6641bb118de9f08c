#include "orthoconf/sphere.hpp"

#include <algorithm>
#include <stdexcept>

#include "orthoconf/linalg.hpp"

namespace orthoconf {

namespace {

void same_dimension(const LiftedPoint& a, const LiftedPoint& b) {
    if (a.coords().size() != b.coords().size())
        throw std::invalid_argument("lifted points live in different dimensions");
}

// Flip so that the first nonzero coordinate is positive.
Vector oriented(const LiftedPoint& p) {
    const auto& c = p.coords();
    const auto lead = std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
    return lead->sign() < 0 ? Rational(-1) * c : c;
}

Rational pair_vectors(const Vector& a, const Vector& b) {
    const std::size_t last = a.size() - 1;
    Rational s = a[0] * b[last] + a[last] * b[0];
    for (std::size_t i = 1; i < last; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

LiftedPoint::LiftedPoint(Vector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3) throw std::invalid_argument("a lifted point needs at least 3 coordinates");
    if (is_zero(coords_)) throw std::invalid_argument("a lifted point cannot be the zero vector");
}

bool LiftedPoint::equivalent(const LiftedPoint& other) const {
    if (coords_.size() != other.coords_.size()) return false;
    // a ~ b iff a_i b_j = a_j b_i for all i, j; compare against a pivot.
    std::size_t pivot = 0;
    while (coords_[pivot].is_zero()) ++pivot;
    if (other.coords_[pivot].is_zero()) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] * other.coords_[pivot] != other.coords_[i] * coords_[pivot]) return false;
    return true;
}

SymmetricMatrix fundamental_form(std::size_t n) {
    if (n < 1) throw std::invalid_argument("the fundamental form needs n >= 1");
    const std::size_t last = n + 1;
    return SymmetricMatrix(n + 2, [last](std::size_t i, std::size_t j) {
        if ((i == 0 && j == last) || (i == last && j == 0)) return Rational(1);
        if (i == j && i != 0 && i != last) return Rational(1);
        return Rational(0);
    });
}

Rational pairing(const LiftedPoint& a, const LiftedPoint& b) {
    same_dimension(a, b);
    return pair_vectors(a.coords(), b.coords());
}

Rational quadric_value(const LiftedPoint& a) { return pairing(a, a); }

LiftedPoint lift(const Sphere& s) {
    const std::size_t n = s.ambient_dim();
    if (n < 1) throw std::invalid_argument("a sphere needs ambient dimension >= 1");
    Vector coords;
    coords.reserve(n + 2);
    coords.emplace_back(1);
    Rational norm;
    for (const auto& a : s.center) {
        coords.push_back(a);
        norm += a * a;
    }
    coords.push_back((s.radius_sq - norm) / Rational(2));
    return LiftedPoint(std::move(coords));
}

Unlifted unlift(const LiftedPoint& p) {
    const auto& c = p.coords();
    if (c[0].is_zero()) return AtInfinity{p};
    Sphere s;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) s.center.push_back(c[i] / c[0]);
    s.radius_sq = quadric_value(p) / (c[0] * c[0]);
    return s;
}

Singularity is_singular(const LiftedPoint& p) {
    const Rational q = quadric_value(p);
    const Rational& a0 = p.coords()[0];
    const std::size_t n = p.ambient_dim();
    Singularity result;
    result.discriminant = pow(a0, static_cast<unsigned>(n - 1)) * q;
    result.singular = (a0 * q).is_zero();
    return result;
}

bool are_orthogonal(const LiftedPoint& p, const LiftedPoint& q) { return pairing(p, q).is_zero(); }

Rational tangency_determinant(const LiftedPoint& p, const LiftedPoint& q) {
    const Rational pq = pairing(p, q);
    return quadric_value(p) * quadric_value(q) - pq * pq;
}

bool are_tangent(const LiftedPoint& p, const LiftedPoint& q) { return tangency_determinant(p, q).is_zero(); }

CommonPoint common_point(std::span<const LiftedPoint> points) {
    if (points.empty()) throw std::invalid_argument("common_point needs n + 1 spheres");
    const std::size_t n = points[0].ambient_dim();
    if (points.size() != n + 1)
        throw std::invalid_argument("common_point needs exactly n + 1 = " + std::to_string(n + 1) + " spheres");
    for (const auto& p : points) same_dimension(points[0], p);

    const SymmetricMatrix f = fundamental_form(n);
    const Matrix fm = f.to_matrix();
    std::vector<Vector> polars;
    polars.reserve(points.size());
    for (const auto& p : points) polars.push_back(fm * p.coords());

    const std::size_t k = points.size();
    Matrix via_polars(k, k);
    Matrix direct(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            via_polars(i, j) = bilinear(f, polars[i], polars[j]);
            direct(i, j) = pairing(points[i], points[j]);
        }
    CommonPoint result;
    result.determinant = determinant(via_polars);
    if (result.determinant != determinant(direct))
        throw std::logic_error("polar and direct common-point determinants disagree");
    result.common = result.determinant.is_zero();
    result.polars_dependent = rank(Matrix::from_columns(polars)) < k;
    return result;
}

Rational cyclic_cosine_invariant(const PointConfiguration& config, std::span<const std::size_t> cycle) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (auto a : cycle)
        if (a >= config.size()) throw std::out_of_range("cycle index out of range");
    Rational num(1);
    Rational den(1);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const std::size_t a = cycle[i];
        const std::size_t b = cycle[(i + 1) % cycle.size()];
        const Rational diag = config.pairing(a, a);
        if (diag.is_zero())
            throw std::invalid_argument("vector " + std::to_string(a) + " is isotropic; the invariant is undefined");
        num *= config.pairing(a, b);
        den *= diag;
    }
    return num / den;
}

std::string_view to_string(HyperplaneRelation r) {
    switch (r) {
        case HyperplaneRelation::intersecting: return "intersecting";
        case HyperplaneRelation::parallel: return "parallel";
        case HyperplaneRelation::divergent: return "divergent";
    }
    return "unknown";
}

HyperbolicPair hyperbolic_pair(const LiftedPoint& v, const LiftedPoint& w) {
    same_dimension(v, w);
    const Rational vv = quadric_value(v);
    const Rational ww = quadric_value(w);
    if (vv.sign() <= 0) throw NotNormalizable("first self-pairing is " + vv.str() + ", not positive", vv);
    if (ww.sign() <= 0) throw NotNormalizable("second self-pairing is " + ww.str() + ", not positive", ww);

    const Rational vw = pair_vectors(oriented(v), oriented(w));
    HyperbolicPair result;
    result.t_squared = vw * vw / (vv * ww);
    result.abs_t = result.t_squared.sqrt_exact();
    if (result.abs_t) result.t = vw.sign() > 0 ? -*result.abs_t : *result.abs_t;
    const auto c = result.t_squared <=> Rational(1);
    result.relation = c < 0 ? HyperplaneRelation::intersecting
                            : (c == 0 ? HyperplaneRelation::parallel : HyperplaneRelation::divergent);
    return result;
}

}  // namespace orthoconf
