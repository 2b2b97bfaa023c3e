#pragma once

#include "golden/precision.hpp"
#include "golden/recurrence.hpp"
#include "golden/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace golden {

inline constexpr double kConvergenceTolerance = 1e-8;
inline constexpr double kIdentityTolerance = 1e-10;

enum class ConvergenceCause {
    converged,
    tolerance_not_reached,
    tied_dominance,        // several roots share the maximal modulus
    zero_dominant_weight,  // seeds carry no component along the dominant root
};

std::string describe(ConvergenceCause cause);

template <class Real>
struct RatioSample {
    std::int64_t k = 0;
    Real value = 0;  // x_{k+1} / x_k
};

template <class Real>
struct BasicConvergenceReport {
    std::vector<RatioSample<Real>> ratios;
    Real final_estimate = 0;
    Complex<Real> target;  // dominant root
    Real abs_error = 0;
    bool converged = false;
    std::int64_t k_used = -1;  // largest k <= k_max with x_k != 0
    ConvergenceCause cause = ConvergenceCause::tolerance_not_reached;
};

using ConvergenceReport = BasicConvergenceReport<StandardReal>;

/// Ratios x_{k+1}/x_k for k = 0..k_max (skipping x_k = 0), computed exactly and
/// then rounded, compared with the dominant root. Throws InvalidSpec for
/// all-zero seeds.
template <class Real>
BasicConvergenceReport<Real> ratio_convergence(const RecurrenceSpec& spec, const SeedVector& seeds,
                                               std::int64_t k_max);

template <class Real>
struct IdentityReport {
    std::vector<Real> defining_residuals;  // |r^n - sum_j coeffs[j] r^j|
    std::vector<Real> inverse_residuals;   // |1/r - (r^{n-1} - sum_{j>=1} coeffs[j] r^{j-1}) / coeffs[0]|
    bool inverse_skipped = false;
    std::string notice;
    Real tolerance = 0;

    Real max_residual() const;
    bool passes() const { return max_residual() <= tolerance; }
};

/// Defining identity for every root and the reciprocal identity
/// 1/x = (x - alpha)/beta generalised to degree n; the latter is skipped
/// when the constant coefficient is zero.
template <class Real>
IdentityReport<Real> golden_identity_check(const RecurrenceSpec& spec, const BasicRootSet<Real>& roots);

/// The two non-dominant cubic roots recovered from the ratio limit L:
/// (alpha - L +- sqrt((alpha - L)^2 - 4 gamma / L)) / 2.
template <class Real>
std::pair<Complex<Real>, Complex<Real>> cubic_conjugates_from_limit(const RecurrenceSpec& spec, const Real& limit);

}  // namespace golden
