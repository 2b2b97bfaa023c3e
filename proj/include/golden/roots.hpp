#pragma once

#include "golden/errors.hpp"
#include "golden/precision.hpp"
#include "golden/recurrence.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace golden {

/// Roots of x^n = sum_j coeffs[j] x^j (the "golden numbers" of a recurrence).
template <class Real>
struct BasicRootSet {
    using complex_type = Complex<Real>;

    std::vector<complex_type> roots;
    std::optional<std::size_t> dominant_index;
    bool dominance_unique = false;
    std::vector<Real> residuals;  // |p(root)| per root

    std::size_t size() const noexcept { return roots.size(); }
    Real max_residual() const;
    Real max_modulus() const;
    /// 1e-10 * max(1, max|root|)^n
    Real residual_tolerance() const;
    bool within_tolerance() const { return max_residual() <= residual_tolerance(); }
};

using RootSet = BasicRootSet<StandardReal>;
using ExtendedRootSet = BasicRootSet<ExtendedReal>;

/// Relative modulus gap at or below which two roots tie for dominance.
inline constexpr double kDominanceTolerance = 1e-9;
inline constexpr int kMaxRootIterations = 200;

/// Raised by general_roots when simultaneous iteration neither settles nor
/// meets the residual gate.
class NonConvergence : public Error {
public:
    NonConvergence(std::vector<std::complex<double>> best, std::vector<double> residuals)
        : Error("root iteration did not converge in " + std::to_string(kMaxRootIterations) +
                " iterations"),
          best_(std::move(best)),
          residuals_(std::move(residuals)) {}

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<std::complex<double>> best_;
    std::vector<double> residuals_;
};

/// phi = (alpha + sigma)/2, varphi = (alpha - sigma)/2, sigma = sqrt(alpha^2 + 4 beta).
/// Returned in that order.
template <class Real>
BasicRootSet<Real> quadratic_roots(const Rational& alpha, const Rational& beta);

/// Cardano form for x^3 = alpha x^2 + beta x + gamma, returned as
/// phi = (alpha + s1 + s2)/3, varphi = (alpha \ s1 / s2)/3, psi = (alpha / s1 \ s2)/3.
template <class Real>
BasicRootSet<Real> cubic_roots(const Rational& alpha, const Rational& beta, const Rational& gamma);

/// Aberth iteration for any degree; roots ordered by descending modulus,
/// then descending real part, then descending imaginary part.
template <class Real>
BasicRootSet<Real> general_roots(const RecurrenceSpec& spec);

/// Slash contributes omega * b, backslash contributes conj(omega) * b, with
/// omega = (-1 + i sqrt 3)/2.
enum class Orientation {
    slash_first,      // x / s1 \ s2 = x + omega s1 + conj(omega) s2
    backslash_first,  // x \ s1 / s2 = x + conj(omega) s1 + omega s2
};

template <class C>
C pseudo_sign_combine(const C& x, const C& s1, const C& s2, Orientation orientation) {
    using R = typename C::value_type;
    using std::sqrt;
    const R h = sqrt(R(3)) / R(2);
    const C omega(R(-0.5), h);
    const C omega_bar(R(-0.5), R(-h));
    if (orientation == Orientation::slash_first) return x + omega * s1 + omega_bar * s2;
    return x + omega_bar * s1 + omega * s2;
}

template <class Real>
struct SymmetricEntry {
    std::size_t order = 0;      // m in e_m
    Complex<Real> elementary;   // e_m(roots)
    Rational expected;          // (-1)^(m-1) coeffs[n-m]
    Real residual = 0;
};

template <class Real>
struct SymmetricReport {
    std::vector<SymmetricEntry<Real>> entries;
    Real max_residual() const;
    bool passes(double tolerance = 1e-8) const { return max_residual() <= Real(tolerance); }
};

/// Residuals of the elementary symmetric polynomials against the coefficients.
template <class Real>
SymmetricReport<Real> verify_symmetric_relations(const BasicRootSet<Real>& roots,
                                                 const RecurrenceSpec& spec);

template <class Real>
struct DominantRoot {
    Complex<Real> value;
    std::size_t index = 0;
    bool unique = false;
};

template <class Real>
DominantRoot<Real> dominant_root(const BasicRootSet<Real>& roots);

/// p(z) = z^n - sum_j coeffs[j] z^j
template <class Real>
Complex<Real> characteristic_value(const RecurrenceSpec& spec, const Complex<Real>& z);

/// Largest pairwise distance under the best one-to-one matching of two root lists.
template <class Real>
Real matching_distance(const std::vector<Complex<Real>>& a, const std::vector<Complex<Real>>& b);

/// Exact test for a repeated root (gcd(p, p') non-constant over the rationals).
bool has_repeated_roots(const RecurrenceSpec& spec);

/// Exact test for 1 being a root (sum of coefficients equals one).
bool has_unit_root(const RecurrenceSpec& spec);

}  // namespace golden
