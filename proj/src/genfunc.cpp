#include "golden/genfunc.hpp"

namespace golden {

Polynomial GeneratingFunction::denominator() const {
    return Polynomial({Rational(1)}) - denominator_tail;
}

std::string GeneratingFunction::to_string(bool unicode) const {
    auto wrap = [](const Polynomial& p, bool unicode_) {
        std::string s = render(p, unicode_);
        std::size_t terms = 0;
        for (const auto& c : p.coeffs())
            if (c != 0) ++terms;
        return terms > 1 ? "(" + s + ")" : s;
    };
    return wrap(numerator, unicode) + "/" + wrap(denominator(), unicode);
}

GeneratingFunction build_genfunc(const RecurrenceSpec& spec, const SeedVector& seeds) {
    check_seeds(spec, seeds);
    const long n = static_cast<long>(spec.degree());
    auto alpha = [&](long j) { return spec.coeff(static_cast<std::size_t>(j)); };
    auto x = [&](long j) { return seeds[static_cast<std::size_t>(j)]; };

    // numerator: sum_{i=1..n} [x_{n-i} - Omega_{n-i-1} sum_{j=0..n-i-1} alpha_{n-1-j} x_{n-i-1-j}] z^{n-i}
    std::vector<Rational> t(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i) {
        Rational inner;
        for (long j = 0; j <= n - i - 1; ++j) inner += alpha(n - 1 - j) * x(n - i - 1 - j);
        t[static_cast<std::size_t>(n - i)] = x(n - i) - unit_function(n - i - 1) * inner;
    }

    std::vector<Rational> r(static_cast<std::size_t>(n + 1));
    for (long i = 1; i <= n; ++i) r[static_cast<std::size_t>(i)] = alpha(n - i);

    return {Polynomial(std::move(t)), Polynomial(std::move(r))};
}

std::vector<Rational> series_coefficients(const GeneratingFunction& gf, std::size_t count) {
    // (1 - R) f = T  =>  c_k = t_k + sum_{i>=1} r_i c_{k-i}
    std::vector<Rational> c;
    c.reserve(count);
    const auto& r = gf.denominator_tail.coeffs();
    for (std::size_t k = 0; k < count; ++k) {
        Rational v = gf.numerator.coeff(k);
        for (std::size_t i = 1; i < r.size() && i <= k; ++i) v += r[i] * c[k - i];
        c.push_back(std::move(v));
    }
    return c;
}

}  // namespace golden
