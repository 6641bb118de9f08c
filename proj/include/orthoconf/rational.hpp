#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace orthoconf {

using Integer = mpz_class;

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Serialized as "p/q", or "p" when q = 1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

    template <std::unsigned_integral T>
    Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

    Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)

    // Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    std::string str() const;

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;

    // Exact square root when this is the square of a rational.
    std::optional<Rational> sqrt_exact() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    // Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

using Vector = std::vector<Rational>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);

}  // namespace orthoconf
