#include "fusionkit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fusionkit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::falling(const Rational& shift, int m) {
    if (m < 0) throw std::invalid_argument("falling power with negative exponent");
    Polynomial out = constant(1);
    for (int j = 0; j < m; ++j) out *= Polynomial({shift - Rational(j), Rational(1)});
    return out;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (coeffs_.empty() || other.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
    for (auto& c : coeffs_) c *= scale;
    trim();
    return *this;
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == Rational(0)) continue;
        bool negative = c < Rational(0);
        Rational magnitude = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = magnitude == Rational(1);
        if (!unit || d == 0) os << magnitude;
        if (d >= 1) os << (unit ? "" : " ") << var;
        if (d >= 2) os << "^" << d;
    }
    return os.str();
}

}  // namespace fusionkit
