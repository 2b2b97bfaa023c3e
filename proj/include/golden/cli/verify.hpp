#pragma once

#include "golden/precision.hpp"
#include "golden/recurrence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace golden::cli {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

struct VerificationReport {
    std::string check;
    CheckStatus status = CheckStatus::skipped;
    std::string residual;  // exact diff or numeric residual, empty when skipped
    std::string note;
    std::vector<Rational> coeffs;
    std::vector<Rational> seeds;
};

struct VerifyOptions {
    std::size_t rows = 8;              // trapezoid depth
    std::size_t series_terms = 20;     // generating-function comparison length
    std::int64_t binet_k = -1;         // negative means the precision's safe limit
    std::int64_t convergence_k = 60;
    Precision precision = Precision::standard;
};

/// Runs every cross-check that applies to the spec and collects one entry per check.
/// Failures are reported, never thrown.
std::vector<VerificationReport> verify_all(const RecurrenceSpec& spec, const SeedVector& seeds,
                                           const VerifyOptions& options = {});

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace golden::cli
