#include "golden/analysis.hpp"

#include "golden/binet.hpp"
#include "golden/errors.hpp"

#include <algorithm>

namespace golden {

std::string describe(ConvergenceCause cause) {
    switch (cause) {
        case ConvergenceCause::converged:
            return "converged";
        case ConvergenceCause::tolerance_not_reached:
            return "ratio has not reached the dominant root within tolerance";
        case ConvergenceCause::tied_dominance:
            return "tied dominance: several roots share the maximal modulus";
        case ConvergenceCause::zero_dominant_weight:
            return "seeds have no component along the dominant root";
    }
    return "unknown";
}

template <class Real>
BasicConvergenceReport<Real> ratio_convergence(const RecurrenceSpec& spec, const SeedVector& seeds,
                                               std::int64_t k_max) {
    check_seeds(spec, seeds);
    if (seeds.all_zero()) throw InvalidSpec("all seeds are zero; the ratio sequence is undefined");
    if (k_max < 1) throw OutOfRange("k_max must be positive");
    using std::abs;

    const auto terms = generate(spec, seeds, static_cast<std::size_t>(k_max + 2));
    BasicConvergenceReport<Real> report;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const auto& xk = terms[static_cast<std::size_t>(k)];
        if (xk == 0) continue;
        const Rational ratio = terms[static_cast<std::size_t>(k + 1)] / xk;
        report.ratios.push_back({k, to_real<Real>(ratio)});
    }
    report.k_used = report.ratios.back().k;
    report.final_estimate = report.ratios.back().value;

    const auto roots = general_roots<Real>(spec);
    const auto dom = dominant_root(roots);
    report.target = dom.value;
    report.abs_error = abs(Complex<Real>(report.final_estimate) - dom.value);

    if (!dom.unique) {
        report.cause = ConvergenceCause::tied_dominance;
        return report;
    }
    try {
        const auto weights = solve_weights(spec, seeds, roots);
        if (abs(weights.weights[dom.index]) <= weights.tol_used) {
            report.cause = ConvergenceCause::zero_dominant_weight;
            return report;
        }
    } catch (const Error&) {
        // repeated roots or a unit root: no weight diagnosis available
    }
    report.converged = report.abs_error <= Real(kConvergenceTolerance);
    report.cause = report.converged ? ConvergenceCause::converged : ConvergenceCause::tolerance_not_reached;
    return report;
}

template <class Real>
Real IdentityReport<Real>::max_residual() const {
    Real m(0);
    for (const auto& r : defining_residuals) m = std::max(m, r);
    for (const auto& r : inverse_residuals) m = std::max(m, r);
    return m;
}

template <class Real>
IdentityReport<Real> golden_identity_check(const RecurrenceSpec& spec, const BasicRootSet<Real>& roots) {
    using std::abs;
    using C = Complex<Real>;
    const std::size_t n = spec.degree();
    std::vector<C> a;
    for (const auto& c : spec.coeffs()) a.emplace_back(to_real<Real>(c));

    IdentityReport<Real> report;
    const Real scale = ipow(std::max(Real(1), roots.max_modulus()), n);
    report.tolerance = Real(kIdentityTolerance) * scale;
    for (const auto& r : roots.roots) {
        C rhs(Real(0));
        for (std::size_t j = 0; j < n; ++j) rhs += a[j] * ipow(r, j);
        report.defining_residuals.push_back(abs(ipow(r, n) - rhs));
    }

    if (spec.degenerate()) {
        report.inverse_skipped = true;
        report.notice = "constant coefficient is zero; reciprocal identity skipped";
        return report;
    }
    const Real a0 = abs(a[0]);
    if (a0 < Real(1)) report.tolerance /= a0;
    for (const auto& r : roots.roots) {
        C tail = ipow(r, n - 1);
        for (std::size_t j = 1; j < n; ++j) tail -= a[j] * ipow(r, j - 1);
        report.inverse_residuals.push_back(abs(C(Real(1)) / r - tail / a[0]));
    }
    return report;
}

template <class Real>
std::pair<Complex<Real>, Complex<Real>> cubic_conjugates_from_limit(const RecurrenceSpec& spec, const Real& limit) {
    if (spec.degree() != 3) throw InvalidSpec("cubic recurrence required");
    using C = Complex<Real>;
    using std::sqrt;
    const Real alpha = to_real<Real>(spec.coeff(2));
    const Real gamma = to_real<Real>(spec.coeff(0));
    const Real shifted = alpha - limit;
    const C root = sqrt(C(shifted * shifted - Real(4) * gamma / limit));
    const C half(Real(0.5));
    return {half * (C(shifted) + root), half * (C(shifted) - root)};
}

#define GOLDEN_INSTANTIATE_ANALYSIS(R)                                                                 \
    template BasicConvergenceReport<R> ratio_convergence<R>(const RecurrenceSpec&, const SeedVector&,  \
                                                            std::int64_t);                             \
    template struct IdentityReport<R>;                                                                 \
    template IdentityReport<R> golden_identity_check<R>(const RecurrenceSpec&, const BasicRootSet<R>&); \
    template std::pair<Complex<R>, Complex<R>> cubic_conjugates_from_limit<R>(const RecurrenceSpec&,   \
                                                                              const R&);

GOLDEN_INSTANTIATE_ANALYSIS(StandardReal)
GOLDEN_INSTANTIATE_ANALYSIS(ExtendedReal)

#undef GOLDEN_INSTANTIATE_ANALYSIS

}  // namespace golden
