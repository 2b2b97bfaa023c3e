#include "golden/cli/verify.hpp"

#include "golden/analysis.hpp"
#include "golden/binet.hpp"
#include "golden/errors.hpp"
#include "golden/genfunc.hpp"
#include "golden/roots.hpp"
#include "golden/trapezoid.hpp"

#include <algorithm>
#include <functional>

namespace golden::cli {

using golden::to_string;

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

namespace {

struct Collector {
    const RecurrenceSpec& spec;
    const SeedVector& seeds;
    std::vector<VerificationReport> out;

    void add(std::string check, CheckStatus status, std::string residual, std::string note = {}) {
        const auto c = spec.coeffs();
        out.push_back({std::move(check), status, std::move(residual), std::move(note),
                       std::vector<Rational>(c.begin(), c.end()), seeds.values});
    }
    void skip(std::string check, std::string note) { add(std::move(check), CheckStatus::skipped, "", std::move(note)); }

    // A library error inside a check becomes a failed entry rather than aborting the run.
    void guarded(const std::string& check, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(check, CheckStatus::fail, "", e.what());
        }
    }
};

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

template <class Real>
void numeric_checks(Collector& c, const VerifyOptions& options) {
    const auto& spec = c.spec;
    const auto& seeds = c.seeds;
    const std::size_t n = spec.degree();

    BasicRootSet<Real> roots;
    try {
        roots = general_roots<Real>(spec);
    } catch (const NonConvergence& e) {
        c.add("roots", CheckStatus::fail, "", e.what());
        return;
    }
    c.add("roots", status_of(roots.within_tolerance()), format_real(roots.max_residual()),
          "max |p(r)| against tolerance " + format_real(roots.residual_tolerance()));

    const auto symmetric = verify_symmetric_relations(roots, spec);
    c.add("symmetric_relations", status_of(symmetric.passes()), format_real(symmetric.max_residual()));

    const auto identity = golden_identity_check(spec, roots);
    Real defining = 0;
    for (const auto& r : identity.defining_residuals) defining = std::max(defining, r);
    c.add("defining_identity", status_of(defining <= identity.tolerance), format_real(defining));
    if (identity.inverse_skipped) {
        c.skip("inverse_identity", identity.notice);
    } else {
        Real inverse = 0;
        for (const auto& r : identity.inverse_residuals) inverse = std::max(inverse, r);
        c.add("inverse_identity", status_of(inverse <= identity.tolerance), format_real(inverse));
    }

    const std::int64_t k_max = options.binet_k < 0 ? max_checked_index<Real>() : options.binet_k;
    if (has_repeated_roots(spec)) {
        c.skip("binet_recurrence", "repeated root; confluent Binet forms are not supported");
        c.skip("binet_constant_weight", "repeated root");
    } else {
        try {
            const auto weights = solve_weights(spec, seeds, roots);
            const auto agreement = compare_with_recurrence(spec, seeds, weights, roots, k_max);
            std::string note = "k <= " + std::to_string(agreement.checked_up_to);
            if (agreement.first_mismatch) note += "; first mismatch at k = " + std::to_string(*agreement.first_mismatch);
            c.add("binet_recurrence", status_of(agreement.passes()), format_real(agreement.max_relative_error), note);
            using std::abs;
            c.add("binet_constant_weight", status_of(weights.constant_vanishes()),
                  format_real(Real(abs(weights.constant_term()))), "bound " + format_real(weights.tol_used));
        } catch (const NumericalError& e) {
            c.skip("binet_recurrence", e.what());
            c.skip("binet_constant_weight", e.what());
        }
    }

    if (n == 2) {
        c.guarded("binet_quadratic_closed", [&] {
            if (has_repeated_roots(spec)) {
                c.skip("binet_quadratic_closed", "repeated root");
                return;
            }
            const Rational alpha = spec.coeff(1), beta = spec.coeff(0);
            Real worst = 0;
            const std::int64_t top = std::min<std::int64_t>(k_max, 30);
            for (std::int64_t k = 0; k <= top; ++k) {
                using std::abs;
                const Real exact = to_real<Real>(term_at(spec, seeds, k));
                const auto value = binet_quadratic_closed<Real>(alpha, beta, seeds, k);
                const Real err = Real(abs(value - Complex<Real>(exact))) / std::max(Real(1), Real(abs(exact)));
                worst = std::max(worst, err);
            }
            c.add("binet_quadratic_closed", status_of(worst <= Real(kBinetTolerance)), format_real(worst),
                  "k <= " + std::to_string(top));
        });
    } else if (n == 3) {
        try {
            const Rational alpha = spec.coeff(2), beta = spec.coeff(1), gamma = spec.coeff(0);
            Real worst = 0;
            std::optional<std::int64_t> first;
            for (std::int64_t k = 0; k <= 20; ++k) {
                const auto r = binet_cubic_closed<Real>(alpha, beta, gamma, seeds, k);
                worst = std::max(worst, r.relative_error);
                if (!r.matches && !first) first = k;
            }
            if (first) {
                c.add("binet_cubic_closed_matches", CheckStatus::fail, format_real(worst),
                      "formula mismatch: the cubic closed form first disagrees with the recurrence at k = " +
                          std::to_string(*first));
            } else {
                c.add("binet_cubic_closed_matches", CheckStatus::pass, format_real(worst), "k <= 20");
            }
        } catch (const DivisionHazard& e) {
            c.skip("binet_cubic_closed_matches", e.what());
        } catch (const DegenerateSpectrum& e) {
            c.skip("binet_cubic_closed_matches", e.what());
        }
    }

    if (seeds.all_zero()) {
        c.skip("ratio_convergence", "all seeds are zero");
        return;
    }
    c.guarded("ratio_convergence", [&] {
        const auto report = ratio_convergence<Real>(spec, seeds, options.convergence_k);
        const bool structural = report.cause == ConvergenceCause::tied_dominance ||
                                report.cause == ConvergenceCause::zero_dominant_weight;
        if (structural) {
            c.skip("ratio_convergence", describe(report.cause));
        } else {
            c.add("ratio_convergence", status_of(report.converged), format_real(report.abs_error),
                  describe(report.cause) + " by k = " + std::to_string(report.k_used));
        }
    });
}

std::string exact_diff(const Rational& a, const Rational& b) { return to_string(Rational(a - b)); }

}  // namespace

std::vector<VerificationReport> verify_all(const RecurrenceSpec& spec, const SeedVector& seeds,
                                           const VerifyOptions& options) {
    check_seeds(spec, seeds);
    Collector c{spec, seeds, {}};
    const std::size_t n = spec.degree();

    c.guarded("genfunc_series", [&] {
        const auto gf = build_genfunc(spec, seeds);
        const auto series = series_coefficients(gf, options.series_terms);
        const auto direct = generate(spec, seeds, options.series_terms);
        std::size_t bad = series.size();
        for (std::size_t k = 0; k < series.size(); ++k)
            if (series[k] != direct[k]) {
                bad = k;
                break;
            }
        if (bad == series.size()) {
            c.add("genfunc_series", CheckStatus::pass, "0", std::to_string(series.size()) + " terms");
        } else {
            c.add("genfunc_series", CheckStatus::fail, exact_diff(series[bad], direct[bad]),
                  "first difference at k = " + std::to_string(bad));
        }
    });

    const std::size_t rows = std::max<std::size_t>(options.rows, 1);
    c.guarded("trapezoid", [&] {
        const auto expansion = build_expansion(spec, seeds, rows);

        if (n == 2 || n == 3) {
            const auto report = compare_closed_form(spec, seeds, rows);
            if (report.matches()) {
                c.add("trapezoid_closed_form", CheckStatus::pass, "0",
                      std::to_string(report.entries_checked) + " entries");
            } else {
                const auto& d = *report.first;
                c.add("trapezoid_closed_form", CheckStatus::fail, exact_diff(d.closed_form, d.expansion),
                      "formula mismatch: first divergence at (i, j) = (" + std::to_string(d.i) + ", " +
                          std::to_string(d.j) + "), " + std::to_string(report.mismatches) + " entries differ");
            }
        } else {
            c.skip("trapezoid_closed_form", "closed forms exist for degrees 2 and 3 only");
        }

        const auto violations = check_row_recurrence(expansion);
        if (violations.empty()) {
            c.add("trapezoid_row_recurrence", CheckStatus::pass, "0");
        } else {
            const auto& v = violations.front();
            c.add("trapezoid_row_recurrence", CheckStatus::fail, exact_diff(v.predicted, v.actual),
                  "row " + std::to_string(v.i) + ", column " + std::to_string(v.j));
        }

        std::optional<std::size_t> bad_sum;
        Rational sum_diff;
        for (std::size_t i = 0; i < rows && !bad_sum; ++i) {
            const auto closed = row_sum(i, spec, seeds);
            const auto direct = direct_row_sum(expansion, i);
            if (closed != direct) {
                bad_sum = i;
                sum_diff = closed - direct;
            }
        }
        if (bad_sum) {
            c.add("trapezoid_row_sums", CheckStatus::fail, to_string(sum_diff), "row " + std::to_string(*bad_sum));
        } else {
            c.add("trapezoid_row_sums", CheckStatus::pass, "0");
        }

        std::optional<std::size_t> bad_diag;
        Rational diag_diff;
        for (std::size_t i = 0; i < rows && !bad_diag; ++i) {
            const auto d = diagonal_sum(expansion, i);
            const auto x = term_at(spec, seeds, static_cast<std::int64_t>(i));
            if (d != x) {
                bad_diag = i;
                diag_diff = d - x;
            }
        }
        if (bad_diag) {
            c.add("trapezoid_diagonal_sums", CheckStatus::fail, to_string(diag_diff), "i = " + std::to_string(*bad_diag));
        } else {
            c.add("trapezoid_diagonal_sums", CheckStatus::pass, "0");
        }
    });

    if (options.precision == Precision::extended) {
        numeric_checks<ExtendedReal>(c, options);
    } else {
        numeric_checks<StandardReal>(c, options);
    }
    return c.out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::none_of(reports.begin(), reports.end(),
                        [](const VerificationReport& r) { return r.status == CheckStatus::fail; });
}

}  // namespace golden::cli
