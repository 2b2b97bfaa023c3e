#include "golden/roots.hpp"

#include "golden/polynomial.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace golden {

namespace {

template <class Real>
Real modulus(const Complex<Real>& z) {
    using std::abs;
    return abs(z);
}

template <class Real>
Complex<Real> characteristic_derivative(const std::vector<Real>& coeffs, const Complex<Real>& z) {
    // p'(z) = n z^(n-1) - sum_{j>=1} j coeffs[j] z^(j-1)
    const std::size_t n = coeffs.size();
    Complex<Real> acc(Real(static_cast<long>(n)));
    for (std::size_t j = n - 1; j >= 1; --j) acc = acc * z - Complex<Real>(Real(static_cast<long>(j)) * coeffs[j]);
    return acc;
}

template <class Real>
Complex<Real> characteristic_from(const std::vector<Real>& coeffs, const Complex<Real>& z) {
    Complex<Real> acc(Real(1));
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z - Complex<Real>(coeffs[j]);
    return acc;
}

template <class Real>
std::vector<Real> real_coeffs(const RecurrenceSpec& spec) {
    std::vector<Real> c;
    c.reserve(spec.degree());
    for (const auto& a : spec.coeffs()) c.push_back(to_real<Real>(a));
    return c;
}

// Descending modulus, then real part, then imaginary part, with a relative
// band so conjugate pairs and sign-symmetric pairs order deterministically.
template <class Real>
bool precedes(const Complex<Real>& a, const Complex<Real>& b) {
    using std::abs;
    using std::imag;
    using std::real;
    const Real ma = abs(a), mb = abs(b);
    const Real scale = std::max(Real(1), std::max(ma, mb));
    const Real band = Real(kDominanceTolerance) * scale;
    if (abs(ma - mb) > band) return ma > mb;
    if (abs(Real(real(a) - real(b))) > band) return real(a) > real(b);
    return imag(a) > imag(b);
}

template <class Real>
void canonical_order(std::vector<Complex<Real>>& roots) {
    // insertion sort tolerates the banded comparator
    for (std::size_t i = 1; i < roots.size(); ++i) {
        for (std::size_t j = i; j > 0 && precedes<Real>(roots[j], roots[j - 1]); --j)
            std::swap(roots[j], roots[j - 1]);
    }
}

template <class Real>
void annotate(BasicRootSet<Real>& set, const RecurrenceSpec& spec) {
    const auto coeffs = real_coeffs<Real>(spec);
    set.residuals.clear();
    for (const auto& z : set.roots) set.residuals.push_back(modulus<Real>(characteristic_from(coeffs, z)));
    if (set.roots.empty()) return;

    std::size_t best = 0;
    for (std::size_t j = 1; j < set.roots.size(); ++j)
        if (modulus<Real>(set.roots[j]) > modulus<Real>(set.roots[best])) best = j;
    const Real top = modulus<Real>(set.roots[best]);
    std::size_t ties = 0;
    for (const auto& z : set.roots)
        if (top - modulus<Real>(z) <= Real(kDominanceTolerance) * top) ++ties;
    set.dominant_index = best;
    set.dominance_unique = ties == 1 && (top > 0 || set.roots.size() == 1);
}

template <class Real>
Complex<Real> complex_sqrt_of(const Rational& value) {
    using std::sqrt;
    if (value >= 0) return Complex<Real>(sqrt(to_real<Real>(value)), Real(0));
    return Complex<Real>(Real(0), sqrt(to_real<Real>(Rational(-value))));
}

// Real radicands take the real cube root, complex ones the principal branch.
template <class Real>
Complex<Real> cube_root(const Complex<Real>& z) {
    using std::cbrt;
    using std::exp;
    using std::imag;
    using std::log;
    using std::real;
    if (imag(z) == 0) return Complex<Real>(cbrt(real(z)), Real(0));
    return exp(log(z) / Complex<Real>(Real(3)));
}

}  // namespace

template <class Real>
Real BasicRootSet<Real>::max_residual() const {
    Real m(0);
    for (const auto& r : residuals) m = std::max(m, r);
    return m;
}

template <class Real>
Real BasicRootSet<Real>::max_modulus() const {
    Real m(0);
    for (const auto& z : roots) m = std::max(m, modulus<Real>(z));
    return m;
}

template <class Real>
Real BasicRootSet<Real>::residual_tolerance() const {
    const Real base = std::max(Real(1), max_modulus());
    return Real(1e-10) * ipow(base, roots.size());
}

template <class Real>
Complex<Real> characteristic_value(const RecurrenceSpec& spec, const Complex<Real>& z) {
    return characteristic_from(real_coeffs<Real>(spec), z);
}

template <class Real>
BasicRootSet<Real> quadratic_roots(const Rational& alpha, const Rational& beta) {
    const Complex<Real> sigma = complex_sqrt_of<Real>(alpha * alpha + 4 * beta);
    const Complex<Real> a(to_real<Real>(alpha));
    const Complex<Real> two(Real(2));
    BasicRootSet<Real> set;
    set.roots = {(a + sigma) / two, (a - sigma) / two};
    annotate(set, make_spec({beta, alpha}));
    return set;
}

template <class Real>
BasicRootSet<Real> cubic_roots(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    using std::abs;
    const Rational A = 2 * alpha * alpha * alpha + 9 * alpha * beta + 27 * gamma;
    const Rational B = alpha * alpha + 3 * beta;
    const Rational disc = A * A - 4 * B * B * B;

    const Complex<Real> a_val(to_real<Real>(A));
    Complex<Real> root_disc = complex_sqrt_of<Real>(disc);
    // Take the larger of (A +- sqrt(disc))/2 so s1 only vanishes when A = B = 0.
    if (abs(a_val + root_disc) < abs(a_val - root_disc)) root_disc = -root_disc;
    const Complex<Real> s1 = cube_root<Real>((a_val + root_disc) / Complex<Real>(Real(2)));
    Complex<Real> s2(Real(0));
    if (s1 != Complex<Real>(Real(0))) s2 = Complex<Real>(to_real<Real>(B)) / s1;

    const Complex<Real> al(to_real<Real>(alpha));
    const Complex<Real> three(Real(3));
    BasicRootSet<Real> set;
    set.roots = {(al + s1 + s2) / three,
                 pseudo_sign_combine(al, s1, s2, Orientation::backslash_first) / three,
                 pseudo_sign_combine(al, s1, s2, Orientation::slash_first) / three};
    if (disc <= 0) {
        // three real roots (with multiplicity); drop rounding noise
        using std::real;
        for (auto& z : set.roots) z = Complex<Real>(real(z), Real(0));
    }
    annotate(set, make_spec({gamma, beta, alpha}));
    return set;
}

template <class Real>
BasicRootSet<Real> general_roots(const RecurrenceSpec& spec) {
    using std::abs;
    using std::cos;
    using std::pow;
    using std::sin;
    const std::size_t n = spec.degree();
    const auto coeffs = real_coeffs<Real>(spec);
    BasicRootSet<Real> set;

    if (n == 1) {
        set.roots = {Complex<Real>(coeffs[0])};
        annotate(set, spec);
        return set;
    }

    // Fujiwara bound on the root moduli
    Real bound(0);
    for (std::size_t j = 1; j <= n; ++j) {
        const Real c = abs(coeffs[n - j]);
        if (c != 0) bound = std::max(bound, Real(pow(c, Real(1) / Real(static_cast<long>(j)))));
    }
    bound *= 2;
    if (bound == 0) {
        set.roots.assign(n, Complex<Real>(Real(0)));
        annotate(set, spec);
        return set;
    }

    const Real center = coeffs[n - 1] / Real(static_cast<long>(n));
    const Real radius = std::max(bound / 2, Real(1e-3));
    const Real two_pi = Real(2) * boost::math::constants::pi<Real>();
    std::vector<Complex<Real>> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Real angle = two_pi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) + Real(0.4);
        z[k] = Complex<Real>(center + radius * cos(angle), radius * sin(angle));
    }

    auto sweep = [&]() {
        std::vector<Complex<Real>> steps(n, Complex<Real>(Real(0)));
        Real worst(0);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex<Real> p = characteristic_from(coeffs, z[k]);
            if (p == Complex<Real>(Real(0))) continue;
            const Complex<Real> dp = characteristic_derivative(coeffs, z[k]);
            Complex<Real> repulsion(Real(0));
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                const Complex<Real> d = z[k] - z[j];
                if (d != Complex<Real>(Real(0))) repulsion += Complex<Real>(Real(1)) / d;
            }
            const Complex<Real> denom = dp / p - repulsion;
            if (denom == Complex<Real>(Real(0))) {
                steps[k] = Complex<Real>(radius * Real(1e-3), radius * Real(1e-3));
            } else {
                steps[k] = Complex<Real>(Real(1)) / denom;
            }
            worst = std::max(worst, Real(abs(steps[k]) / (Real(1) + abs(z[k]))));
        }
        for (std::size_t k = 0; k < n; ++k) z[k] -= steps[k];
        return worst;
    };

    bool settled = false;
    for (int it = 0; it < kMaxRootIterations; ++it) {
        if (sweep() <= Real(1e-14)) {
            settled = true;
            break;
        }
    }
    if (settled) sweep();  // one polishing pass at full working precision

    set.roots = z;
    canonical_order<Real>(set.roots);
    annotate(set, spec);
    // Clustered (repeated) roots stall the step criterion while their
    // residuals are already at rounding level; accept those.
    if (!settled && !set.within_tolerance()) {
        std::vector<std::complex<double>> best;
        std::vector<double> res;
        for (const auto& r : set.roots) {
            using std::imag;
            using std::real;
            best.emplace_back(to_double(Real(real(r))), to_double(Real(imag(r))));
        }
        for (const auto& r : set.residuals) res.push_back(to_double(r));
        throw NonConvergence(std::move(best), std::move(res));
    }
    return set;
}

template <class Real>
Real SymmetricReport<Real>::max_residual() const {
    Real m(0);
    for (const auto& e : entries) m = std::max(m, e.residual);
    return m;
}

template <class Real>
SymmetricReport<Real> verify_symmetric_relations(const BasicRootSet<Real>& roots,
                                                 const RecurrenceSpec& spec) {
    using std::abs;
    const std::size_t n = spec.degree();
    if (roots.size() != n) throw InvalidSpec("root set size does not match spec degree");
    // e[m] after folding in all roots: coefficients of prod (1 + r t)
    std::vector<Complex<Real>> e(n + 1, Complex<Real>(Real(0)));
    e[0] = Complex<Real>(Real(1));
    for (const auto& r : roots.roots)
        for (std::size_t m = n; m >= 1; --m) e[m] += e[m - 1] * r;

    SymmetricReport<Real> report;
    for (std::size_t m = 1; m <= n; ++m) {
        SymmetricEntry<Real> entry;
        entry.order = m;
        entry.elementary = e[m];
        entry.expected = (m % 2 == 1 ? 1 : -1) * spec.coeff(n - m);
        entry.residual = abs(e[m] - Complex<Real>(to_real<Real>(entry.expected)));
        report.entries.push_back(std::move(entry));
    }
    return report;
}

template <class Real>
DominantRoot<Real> dominant_root(const BasicRootSet<Real>& roots) {
    if (roots.roots.empty()) throw InvalidSpec("empty root set");
    const std::size_t idx = roots.dominant_index.value_or(0);
    return {roots.roots[idx], idx, roots.dominance_unique};
}

template <class Real>
Real matching_distance(const std::vector<Complex<Real>>& a, const std::vector<Complex<Real>>& b) {
    using std::abs;
    if (a.size() != b.size()) throw InvalidSpec("root lists differ in length");
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    Real best = std::numeric_limits<Real>::infinity();
    if (a.size() <= 8) {
        do {
            Real worst(0);
            for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, Real(abs(a[i] - b[perm[i]])));
            best = std::min(best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    // greedy nearest match for long lists
    std::vector<bool> used(b.size(), false);
    Real worst(0);
    for (const auto& x : a) {
        std::size_t pick = 0;
        Real d = std::numeric_limits<Real>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && abs(x - b[j]) < d) {
                d = abs(x - b[j]);
                pick = j;
            }
        used[pick] = true;
        worst = std::max(worst, d);
    }
    return worst;
}

namespace {

Polynomial characteristic_polynomial(const RecurrenceSpec& spec) {
    std::vector<Rational> c(spec.degree() + 1);
    for (std::size_t j = 0; j < spec.degree(); ++j) c[j] = -spec.coeff(j);
    c[spec.degree()] = 1;
    return Polynomial(std::move(c));
}

}  // namespace

bool has_repeated_roots(const RecurrenceSpec& spec) {
    const Polynomial p = characteristic_polynomial(spec);
    return gcd(p, p.derivative()).degree() >= 1;
}

bool has_unit_root(const RecurrenceSpec& spec) {
    Rational sum;
    for (const auto& c : spec.coeffs()) sum += c;
    return sum == 1;
}

#define GOLDEN_INSTANTIATE_ROOTS(R)                                                              \
    template struct BasicRootSet<R>;                                                             \
    template struct SymmetricReport<R>;                                                          \
    template BasicRootSet<R> quadratic_roots<R>(const Rational&, const Rational&);               \
    template BasicRootSet<R> cubic_roots<R>(const Rational&, const Rational&, const Rational&);  \
    template BasicRootSet<R> general_roots<R>(const RecurrenceSpec&);                            \
    template SymmetricReport<R> verify_symmetric_relations<R>(const BasicRootSet<R>&,            \
                                                              const RecurrenceSpec&);            \
    template DominantRoot<R> dominant_root<R>(const BasicRootSet<R>&);                           \
    template Complex<R> characteristic_value<R>(const RecurrenceSpec&, const Complex<R>&);       \
    template R matching_distance<R>(const std::vector<Complex<R>>&, const std::vector<Complex<R>>&);

GOLDEN_INSTANTIATE_ROOTS(StandardReal)
GOLDEN_INSTANTIATE_ROOTS(ExtendedReal)

#undef GOLDEN_INSTANTIATE_ROOTS

}  // namespace golden
