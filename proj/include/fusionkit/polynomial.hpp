#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fusionkit/rational.hpp"

namespace fusionkit {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// The monomial x.
    static Polynomial identity();
    /// (x + shift)^{falling m}, expanded.
    static Polynomial falling(const Rational& shift, int m);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scale);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str(const std::string& var = "J") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace fusionkit
