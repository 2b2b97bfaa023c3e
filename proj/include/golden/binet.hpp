#pragma once

#include "golden/precision.hpp"
#include "golden/recurrence.hpp"
#include "golden/roots.hpp"

#include <optional>
#include <vector>

namespace golden {

inline constexpr double kWeightTolerance = 1e-9;      // |w_{n+1}|, scale-relative
inline constexpr double kImaginaryTolerance = 1e-9;   // residual imaginary part, scale-relative
inline constexpr double kBinetTolerance = 1e-6;       // closed form vs exact term, relative
inline constexpr double kSeparationTolerance = 1e-7;  // distinct-root guard, relative

/// Largest k for which rounded Binet values are guaranteed to hit the exact term.
template <class Real>
constexpr std::int64_t max_checked_index() {
    return std::is_same_v<Real, StandardReal> ? 40 : 70;
}

/// Weights of x_k = sum_j w_j root_j^k + w_{n+1}, fitted to x_0..x_n.
template <class Real>
struct BasicBinetWeights {
    std::vector<Complex<Real>> weights;  // n + 1 entries; the last is the constant term
    std::size_t spec_degree = 0;
    Real tol_used = 0;                   // absolute bound applied to |w_{n+1}|
    Real condition_estimate = 0;         // 1-norm condition number of the fitted system
    bool integral = false;               // spec and seeds are integers

    const Complex<Real>& constant_term() const { return weights.back(); }
    bool constant_vanishes() const;
};

using BinetWeights = BasicBinetWeights<StandardReal>;

/// Solves the (n+1)x(n+1) system with rows (r_1^k, ..., r_n^k, 1) = x_k, k = 0..n.
/// Throws DegenerateSpectrum for repeated roots and NumericalError when the
/// system is singular (e.g. 1 is a root, duplicating the constant column).
template <class Real>
BasicBinetWeights<Real> solve_weights(const RecurrenceSpec& spec, const SeedVector& seeds,
                                      const BasicRootSet<Real>& roots);

template <class Real>
struct BinetValue {
    Complex<Real> value;
    std::optional<Integer> rounded;  // set when spec and seeds are integral
};

template <class Real>
BinetValue<Real> binet_eval(const BasicBinetWeights<Real>& weights, const BasicRootSet<Real>& roots,
                            std::int64_t k);

/// x_k = [((phi - alpha) x_0 + x_1) / sqrt(alpha^2 + 4 beta)] (phi^k - varphi^k) + varphi^k x_0
template <class Real>
Complex<Real> binet_quadratic_closed(const Rational& alpha, const Rational& beta,
                                     const SeedVector& seeds, std::int64_t k);

/// Value of the three-root closed form together with the exact term it
/// is supposed to reproduce.
template <class Real>
struct CubicClosedResult {
    Complex<Real> value;
    Rational expected;
    Real relative_error = 0;
    bool matches = false;  // false is a formula-mismatch report
};

/// Three-root closed form taken term by term, evaluated with (phi, varphi, psi) from
/// cubic_roots and compared against term_at. Throws DivisionHazard when 1 is
/// a root and DegenerateSpectrum for repeated roots.
template <class Real>
CubicClosedResult<Real> binet_cubic_closed(const Rational& alpha, const Rational& beta,
                                           const Rational& gamma, const SeedVector& seeds,
                                           std::int64_t k);

template <class Real>
struct RecurrenceAgreement {
    std::int64_t checked_up_to = -1;
    std::optional<std::int64_t> first_mismatch;
    Real max_relative_error = 0;
    Real max_imaginary = 0;  // scale-relative
    bool passes() const { return !first_mismatch.has_value(); }
};

/// Compares binet_eval with the exact recurrence for k = 0..k_max. Integral
/// inputs must round to the exact term with a small imaginary part; other
/// inputs must agree to kBinetTolerance relative.
template <class Real>
RecurrenceAgreement<Real> compare_with_recurrence(const RecurrenceSpec& spec, const SeedVector& seeds,
                                                  const BasicBinetWeights<Real>& weights,
                                                  const BasicRootSet<Real>& roots, std::int64_t k_max);

}  // namespace golden
