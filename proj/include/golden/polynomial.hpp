#pragma once

#include "golden/rational.hpp"

#include <string>
#include <vector>

namespace golden {

/// Dense univariate polynomial over the rationals; coeffs[i] multiplies z^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of z^i, zero beyond the stored range.
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational evaluate(const Rational& z) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    bool operator==(const Polynomial&) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Remainder of a / b; b must be non-zero.
Polynomial remainder(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Human-readable form in the variable `var`, highest power last:
/// `2 - z`, `1 - z - z^2`. With `unicode` set, uses the minus sign and
/// superscript digits (`1 − z − z²`).
std::string render(const Polynomial& p, bool unicode = false, const std::string& var = "z");

}  // namespace golden
