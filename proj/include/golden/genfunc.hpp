#pragma once

#include "golden/polynomial.hpp"
#include "golden/recurrence.hpp"

#include <string>
#include <vector>

namespace golden {

/// f(z) = T(z) / (1 - R(z)), whose Taylor coefficients are the sequence terms.
struct GeneratingFunction {
    Polynomial numerator;        // T, degree <= n - 1
    Polynomial denominator_tail; // R = sum_{i=1..n} coeffs[n-i] z^i

    Polynomial denominator() const;
    /// `z/(1 - z - z^2)`; unicode selects `z/(1 − z − z²)`.
    std::string to_string(bool unicode = false) const;
};

/// Step function: 1 for n >= 0, 0 otherwise.
constexpr int unit_function(long n) noexcept { return n >= 0 ? 1 : 0; }

GeneratingFunction build_genfunc(const RecurrenceSpec& spec, const SeedVector& seeds);

/// First `count` Taylor coefficients of T / (1 - R).
std::vector<Rational> series_coefficients(const GeneratingFunction& gf, std::size_t count);

}  // namespace golden
