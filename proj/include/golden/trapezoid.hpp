#pragma once

#include "golden/recurrence.hpp"

#include <optional>
#include <vector>

namespace golden {

enum class TrapezoidMethod { expansion, closed_form };

/// Arithmetic trapezoid: row i lists the coefficients of T * R^i from z^i
/// upwards, i(n-1)+n entries per row.
struct Trapezoid {
    RecurrenceSpec spec;
    SeedVector seeds;
    TrapezoidMethod method = TrapezoidMethod::expansion;
    std::vector<std::vector<Rational>> rows;

    std::size_t degree() const noexcept { return spec.degree(); }
    /// C_{i,j}; zero outside the stored rows.
    Rational at(long i, long j) const;
};

constexpr std::size_t row_length(std::size_t i, std::size_t n) noexcept { return i * (n - 1) + n; }

/// Rows 0..num_rows-1 of T * R^i. num_rows must be positive.
Trapezoid build_expansion(const RecurrenceSpec& spec, const SeedVector& seeds, std::size_t num_rows);

/// Closed-form quadratic entry, 0 <= j <= i + 1.
Rational coeff_quadratic(long i, long j, const Rational& alpha, const Rational& beta,
                         const SeedVector& seeds);

/// Cubic entry, 0 <= j <= 2i + 2, as a finite binomial sum with m = floor(j/2).
Rational coeff_cubic(long i, long j, const Rational& alpha, const Rational& beta,
                     const Rational& gamma, const SeedVector& seeds);

/// Closed-form trapezoid for degree 2 or 3.
Trapezoid build_closed_form(const RecurrenceSpec& spec, const SeedVector& seeds, std::size_t num_rows);

struct Divergence {
    long i = 0;
    long j = 0;
    Rational closed_form;
    Rational expansion;
};

struct ClosedFormReport {
    std::size_t entries_checked = 0;
    std::size_t mismatches = 0;
    std::optional<Divergence> first;  // first divergent entry in row-major order

    bool matches() const noexcept { return mismatches == 0; }
};

/// Entry-by-entry comparison of the closed form against the expansion.
ClosedFormReport compare_closed_form(const RecurrenceSpec& spec, const SeedVector& seeds,
                                     std::size_t num_rows);

struct RowViolation {
    long i = 0;  // row the identity predicts from
    long j = 0;  // column in row i + 1
    Rational predicted;
    Rational actual;
};

/// C_{i+1,j+n-1} = sum_k coeffs[k] C_{i,j+k}, checked for every entry of rows 1.. .
std::vector<RowViolation> check_row_recurrence(const Trapezoid& t);

/// Closed-form sum of row i.
Rational row_sum(std::size_t i, const RecurrenceSpec& spec, const SeedVector& seeds);

Rational direct_row_sum(const Trapezoid& t, std::size_t i);

/// sum_{j=0..i} C_{i-j,j} (= x_i). Needs at least i + 1 rows.
Rational diagonal_sum(const Trapezoid& t, std::size_t i);

/// Removes the leftmost column; requires it to be all zero (x_0 = 0).
Trapezoid drop_zero_layer(const Trapezoid& t);

}  // namespace golden
