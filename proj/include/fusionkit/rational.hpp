#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "fusionkit/int128.hpp"

namespace fusionkit {

/// Exact rational number over checked 128-bit integers.
///
/// Always stored in lowest terms with a positive denominator. Every operation
/// throws Overflow instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int128 value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(Int128 num, Int128 den);

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    /// Integer value; throws std::domain_error when the denominator is not 1.
    Int128 to_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

private:
    void normalize();

    Int128 num_ = 0;
    Int128 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// x (x-1) ... (x-m+1); the empty product (m = 0) is 1.
Rational falling_power(const Rational& x, int m);

Rational factorial(int n);

}  // namespace fusionkit
