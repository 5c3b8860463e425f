#include "fusionkit/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusionkit {

std::string to_string(Int128 value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    std::string digits;
    // Work with negative remainders so the minimum value prints correctly.
    while (value != 0) {
        int digit = static_cast<int>(value % 10);
        digits.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        value /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int128 parse_int128(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw ParseError("integer has no digits: '" + std::string(text) + "'");
    Int128 value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw ParseError("invalid integer: '" + std::string(text) + "'");
        try {
            value = checked_add(checked_mul(value, 10), c - '0');
        } catch (const Overflow&) {
            throw ParseError("integer out of range: '" + std::string(text) + "'");
        }
    }
    return negative ? -value : value;
}

Rational::Rational(Int128 num, Int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = checked_sub(0, num_);
        den_ = checked_sub(0, den_);
    }
    Int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Int128 Rational::to_integer() const {
    if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
    return num_;
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = checked_sub(0, num_);
    out.den_ = den_;
    return out;
}

Rational& Rational::operator+=(const Rational& other) {
    Int128 g = gcd128(den_, other.den_);
    Int128 lhs_scale = other.den_ / g;
    Int128 rhs_scale = den_ / g;
    num_ = checked_add(checked_mul(num_, lhs_scale), checked_mul(other.num_, rhs_scale));
    den_ = checked_mul(den_, lhs_scale);
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
    // Cross-cancel first to keep intermediates small.
    Int128 g1 = gcd128(num_, other.den_);
    Int128 g2 = gcd128(other.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    num_ = checked_mul(num_ / g1, other.num_ / g2);
    den_ = checked_mul(den_ / g2, other.den_ / g1);
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.num_ == 0) throw std::domain_error("rational division by zero");
    Rational inverse;
    inverse.num_ = other.den_;
    inverse.den_ = other.num_;
    inverse.normalize();
    return *this *= inverse;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int128 lhs = checked_mul(a.num_, b.den_);
    Int128 rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational falling_power(const Rational& x, int m) {
    if (m < 0) throw std::invalid_argument("falling power with negative exponent");
    Rational out = 1;
    for (int j = 0; j < m; ++j) out *= x - Rational(j);
    return out;
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Rational out = 1;
    for (int j = 2; j <= n; ++j) out *= Rational(j);
    return out;
}

}  // namespace fusionkit
