#include "golden/binet.hpp"

#include "golden/errors.hpp"

#include <algorithm>
#include <limits>

namespace golden {

namespace {

template <class Real>
using CMatrix = std::vector<std::vector<Complex<Real>>>;

template <class Real>
Real abs_of(const Complex<Real>& z) {
    using std::abs;
    return abs(z);
}

template <class Real>
Real one_norm(const CMatrix<Real>& m) {
    Real best(0);
    for (std::size_t c = 0; c < m.size(); ++c) {
        Real col(0);
        for (std::size_t r = 0; r < m.size(); ++r) col += abs_of<Real>(m[r][c]);
        best = std::max(best, col);
    }
    return best;
}

// Gauss-Jordan with partial pivoting; returns the inverse or nullopt if a
// pivot falls below the singularity threshold.
template <class Real>
std::optional<CMatrix<Real>> invert(CMatrix<Real> a) {
    const std::size_t n = a.size();
    const Real threshold = Real(static_cast<long>(n)) * std::numeric_limits<Real>::epsilon() * one_norm<Real>(a);
    CMatrix<Real> inv(n, std::vector<Complex<Real>>(n, Complex<Real>(Real(0))));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Complex<Real>(Real(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs_of<Real>(a[r][col]) > abs_of<Real>(a[pivot][col])) pivot = r;
        if (abs_of<Real>(a[pivot][col]) <= threshold) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Complex<Real> scale = Complex<Real>(Real(1)) / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] *= scale;
            inv[col][c] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Complex<Real>(Real(0))) continue;
            const Complex<Real> f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

template <class Real>
Real term_scale(const std::vector<Rational>& terms) {
    Real scale(1);
    for (const auto& x : terms) {
        using std::abs;
        scale = std::max(scale, Real(abs(to_real<Real>(x))));
    }
    return scale;
}

template <class Real>
void require_separated(const BasicRootSet<Real>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const Real gap = abs_of<Real>(roots.roots[i] - roots.roots[j]);
            const Real scale = std::max({Real(1), abs_of<Real>(roots.roots[i]), abs_of<Real>(roots.roots[j])});
            if (gap < Real(kSeparationTolerance) * scale)
                throw DegenerateSpectrum("roots " + std::to_string(i) + " and " + std::to_string(j) +
                                         " coincide within the separation tolerance");
        }
}

}  // namespace

template <class Real>
bool BasicBinetWeights<Real>::constant_vanishes() const {
    return abs_of<Real>(constant_term()) <= tol_used;
}

template <class Real>
BasicBinetWeights<Real> solve_weights(const RecurrenceSpec& spec, const SeedVector& seeds,
                                      const BasicRootSet<Real>& roots) {
    check_seeds(spec, seeds);
    const std::size_t n = spec.degree();
    if (roots.size() != n) throw InvalidSpec("root set size does not match spec degree");
    if (has_repeated_roots(spec))
        throw DegenerateSpectrum("characteristic polynomial has a repeated root; confluent Binet forms are not supported");
    require_separated(roots);

    CMatrix<Real> system(n + 1, std::vector<Complex<Real>>(n + 1));
    for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t j = 0; j < n; ++j) system[r][j] = ipow(roots.roots[j], r);
        system[r][n] = Complex<Real>(Real(1));
    }
    const auto inverse = invert<Real>(system);
    if (!inverse) {
        const std::string why = has_unit_root(spec)
                                    ? "1 is a root, so the constant column repeats a root column"
                                    : "weight system is numerically singular";
        throw NumericalError(why, std::numeric_limits<double>::infinity());
    }

    const auto terms = generate(spec, seeds, n + 1);
    BasicBinetWeights<Real> out;
    out.spec_degree = n;
    out.weights.assign(n + 1, Complex<Real>(Real(0)));
    for (std::size_t r = 0; r <= n; ++r)
        for (std::size_t c = 0; c <= n; ++c)
            out.weights[r] += (*inverse)[r][c] * Complex<Real>(to_real<Real>(terms[c]));
    out.tol_used = Real(kWeightTolerance) * term_scale<Real>(terms);
    out.condition_estimate = one_norm<Real>(system) * one_norm<Real>(*inverse);
    out.integral = spec.integral() && seeds.integral();
    return out;
}

template <class Real>
BinetValue<Real> binet_eval(const BasicBinetWeights<Real>& weights, const BasicRootSet<Real>& roots,
                            std::int64_t k) {
    if (k < 0) throw OutOfRange("negative term index " + std::to_string(k));
    if (weights.weights.size() != roots.size() + 1) throw InvalidSpec("weights do not match root set");
    Complex<Real> sum = weights.constant_term();
    for (std::size_t j = 0; j < roots.size(); ++j)
        sum += weights.weights[j] * ipow(roots.roots[j], static_cast<std::uint64_t>(k));
    BinetValue<Real> out{sum, std::nullopt};
    if (weights.integral) {
        using std::real;
        out.rounded = round_to_integer<Real>(real(sum));
    }
    return out;
}

template <class Real>
Complex<Real> binet_quadratic_closed(const Rational& alpha, const Rational& beta,
                                     const SeedVector& seeds, std::int64_t k) {
    if (seeds.size() != 2) throw SeedLengthMismatch(2, seeds.size());
    if (k < 0) throw OutOfRange("negative term index " + std::to_string(k));
    const Rational disc = alpha * alpha + 4 * beta;
    if (disc == 0) throw DegenerateSpectrum("alpha^2 + 4 beta = 0: repeated root");
    const auto roots = quadratic_roots<Real>(alpha, beta);
    const Complex<Real>& phi = roots.roots[0];
    const Complex<Real>& varphi = roots.roots[1];
    using std::sqrt;
    const Complex<Real> sigma = disc > 0 ? Complex<Real>(sqrt(to_real<Real>(disc)), Real(0))
                                         : Complex<Real>(Real(0), sqrt(to_real<Real>(Rational(-disc))));
    const Complex<Real> x0(to_real<Real>(seeds[0]));
    const Complex<Real> x1(to_real<Real>(seeds[1]));
    const Complex<Real> a(to_real<Real>(alpha));
    const auto e = static_cast<std::uint64_t>(k);
    const Complex<Real> varphi_k = ipow(varphi, e);
    return ((phi - a) * x0 + x1) / sigma * (ipow(phi, e) - varphi_k) + varphi_k * x0;
}

template <class Real>
CubicClosedResult<Real> binet_cubic_closed(const Rational& alpha, const Rational& beta,
                                           const Rational& gamma, const SeedVector& seeds,
                                           std::int64_t k) {
    if (seeds.size() != 3) throw SeedLengthMismatch(3, seeds.size());
    if (k < 0) throw OutOfRange("negative term index " + std::to_string(k));
    const RecurrenceSpec spec = make_spec({gamma, beta, alpha});
    if (has_repeated_roots(spec)) throw DegenerateSpectrum("cubic has a repeated root");
    if (has_unit_root(spec)) throw DivisionHazard("1 is a root; the cubic closed form divides by (root - 1)");
    const auto roots = cubic_roots<Real>(alpha, beta, gamma);
    require_separated(roots);

    using C = Complex<Real>;
    const C one(Real(1));
    const C& F = roots.roots[0];  // phi
    const C& P = roots.roots[1];  // varphi
    const C& S = roots.roots[2];  // psi
    for (const C& r : roots.roots)
        if (abs_of<Real>(r - one) < Real(kSeparationTolerance))
            throw DivisionHazard("a root lies within the separation tolerance of 1");

    const C a(to_real<Real>(alpha)), b(to_real<Real>(beta)), g(to_real<Real>(gamma));
    const C x0(to_real<Real>(seeds[0])), x1(to_real<Real>(seeds[1])), x2(to_real<Real>(seeds[2]));
    const auto e = static_cast<std::uint64_t>(k);
    const C Fk = ipow(F, e), Pk = ipow(P, e), Sk = ipow(S, e);

    // kept exactly as stated, so a mismatch is reported rather than patched
    const C bracket = ((a - P - S - one) * x2 + (b + P * S + P + S) * x1 + (g - P * S) * x0) /
                      ((F - P) * (P - S) * (F - S));
    const C powers = (S - P) / (F - one) * Fk - (S - F) / (P - one) * Pk + (P - F) / (S - one) * Sk;
    const C psi_part = (x2 - (P + one) * x1 + P * x0) / ((S - one) * (S - P)) * Sk;
    const C varphi_part = (x2 - (S + one) * x1 + S * x0) / ((P - one) * (S - P)) * Pk;

    CubicClosedResult<Real> out;
    out.value = bracket * powers + psi_part - varphi_part;
    out.expected = term_at(spec, seeds, k);
    const C exact(to_real<Real>(out.expected));
    using std::abs;
    const Real scale = std::max(Real(1), Real(abs(to_real<Real>(out.expected))));
    out.relative_error = abs_of<Real>(out.value - exact) / scale;
    out.matches = out.relative_error <= Real(kBinetTolerance);
    return out;
}

template <class Real>
RecurrenceAgreement<Real> compare_with_recurrence(const RecurrenceSpec& spec, const SeedVector& seeds,
                                                  const BasicBinetWeights<Real>& weights,
                                                  const BasicRootSet<Real>& roots, std::int64_t k_max) {
    using std::abs;
    using std::imag;
    using std::real;
    RecurrenceAgreement<Real> report;
    const auto terms = generate(spec, seeds, static_cast<std::size_t>(k_max + 1));
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const auto& exact = terms[static_cast<std::size_t>(k)];
        const auto v = binet_eval(weights, roots, k);
        const Real ex = to_real<Real>(exact);
        const Real scale = Real(1) + Real(abs(ex));
        const Real im = Real(abs(Real(imag(v.value)))) / scale;
        const Real rel = abs_of<Real>(v.value - Complex<Real>(ex)) / std::max(Real(1), Real(abs(ex)));
        report.max_imaginary = std::max(report.max_imaginary, im);
        report.max_relative_error = std::max(report.max_relative_error, rel);
        report.checked_up_to = k;
        bool ok;
        if (v.rounded) {
            ok = Rational(*v.rounded) == exact && im <= Real(1e-6);
        } else {
            ok = rel <= Real(kBinetTolerance);
        }
        if (!ok && !report.first_mismatch) report.first_mismatch = k;
    }
    return report;
}

#define GOLDEN_INSTANTIATE_BINET(R)                                                                  \
    template struct BasicBinetWeights<R>;                                                            \
    template BasicBinetWeights<R> solve_weights<R>(const RecurrenceSpec&, const SeedVector&,         \
                                                   const BasicRootSet<R>&);                          \
    template BinetValue<R> binet_eval<R>(const BasicBinetWeights<R>&, const BasicRootSet<R>&,        \
                                         std::int64_t);                                              \
    template Complex<R> binet_quadratic_closed<R>(const Rational&, const Rational&, const SeedVector&, \
                                                  std::int64_t);                                     \
    template CubicClosedResult<R> binet_cubic_closed<R>(const Rational&, const Rational&,            \
                                                        const Rational&, const SeedVector&,          \
                                                        std::int64_t);                               \
    template RecurrenceAgreement<R> compare_with_recurrence<R>(                                      \
        const RecurrenceSpec&, const SeedVector&, const BasicBinetWeights<R>&,                       \
        const BasicRootSet<R>&, std::int64_t);

GOLDEN_INSTANTIATE_BINET(StandardReal)
GOLDEN_INSTANTIATE_BINET(ExtendedReal)

#undef GOLDEN_INSTANTIATE_BINET

}  // namespace golden
