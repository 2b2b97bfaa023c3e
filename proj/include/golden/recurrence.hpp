#pragma once

#include "golden/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace golden {

/// Degree-n linear recurrence x_{k+n} = sum_j coeffs[j] * x_{k+j}, equivalently
/// the monic polynomial x^n = sum_j coeffs[j] * x^j. coeffs[0] is the constant
/// term, coeffs[n-1] multiplies x_{k+n-1}.
class RecurrenceSpec {
public:
    std::size_t degree() const noexcept { return coeffs_.size(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(std::size_t j) const { return coeffs_.at(j); }

    /// Constant coefficient is zero, so the recurrence factors through a lower degree.
    bool degenerate() const noexcept { return coeffs_.front() == 0; }
    bool integral() const;

    bool operator==(const RecurrenceSpec&) const = default;

private:
    friend RecurrenceSpec make_spec(std::vector<Rational> coeffs);
    explicit RecurrenceSpec(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<Rational> coeffs_;
};

/// Throws InvalidSpec on an empty list.
RecurrenceSpec make_spec(std::vector<Rational> coeffs);

/// Initial terms x_0..x_{n-1}.
struct SeedVector {
    std::vector<Rational> values;

    std::size_t size() const noexcept { return values.size(); }
    const Rational& operator[](std::size_t i) const { return values[i]; }
    bool integral() const;
    bool all_zero() const;

    bool operator==(const SeedVector&) const = default;
};

/// x_k written as a linear form in the seeds: x_k = sum_j seed_coeffs[j] * x_j.
struct SymbolicTerm {
    std::vector<Rational> seed_coeffs;

    Rational evaluate(const SeedVector& seeds) const;
};

void check_seeds(const RecurrenceSpec& spec, const SeedVector& seeds);

/// First `count` terms by direct iteration of the recurrence.
std::vector<Rational> generate(const RecurrenceSpec& spec, const SeedVector& seeds,
                               std::size_t count);

/// x_k through binary exponentiation of the companion matrix; O(n^3 log k).
/// Negative k throws OutOfRange.
Rational term_at(const RecurrenceSpec& spec, const SeedVector& seeds, std::int64_t k);

/// Coefficients of x_0..x_{n-1} in x_k, built by advancing linear forms.
SymbolicTerm symbolic_term(const RecurrenceSpec& spec, std::int64_t k);

}  // namespace golden
