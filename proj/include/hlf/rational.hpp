#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlf {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. All invariant and bound computations in this library go
/// through this type; there is no floating point anywhere in the math.
///
/// Serialization contract:
///   - fraction_string() emits "p/q" with the denominator always present,
///     including integers ("5/1", "-3/1", "0/1").
///   - parse() accepts "p" and "p/q" with optional leading '-' on p,
///     rejects everything else (whitespace, q == 0, empty parts).
///   - decimal_string() renders 6 significant digits by exact integer long
///     division, with fixed/scientific selection matching printf %g rules.
///     It exists for human-facing report fields only and never feeds back
///     into computation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(const Int& n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(int n) : v_(n) {}

    /// Throws std::domain_error if den == 0. Signs are normalized so the
    /// stored denominator is positive.
    Rational(Int num, Int den);

    static Rational parse(std::string_view text);

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    bool is_nonneg() const { return v_.sign() >= 0; }
    int sign() const { return v_.sign(); }

    /// Throws std::domain_error if the value is not an integer.
    Int as_integer() const;

    /// floor(value), exact.
    Int floor() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string fraction_string() const;
    std::string decimal_string(int significant_digits = 6) const;

private:
    boost::multiprecision::cpp_rational v_;
};

}  // namespace hlf
