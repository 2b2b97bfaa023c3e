#pragma once

// Test-only generators and oracles. Nothing here calls into the code paths
// it is used to check.

#include "golden/golden.hpp"

#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace golden::testing {

inline Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

inline std::vector<Rational> qs(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.push_back(q(v));
    return out;
}

inline SeedVector seeds_of(std::initializer_list<long> values) { return SeedVector{qs(values)}; }

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// p/q with |p/q| <= bound, q in 1..max_den
    Rational rational(long bound, long max_den = 4) {
        const long den = integer(1, max_den);
        return q(integer(-bound * den, bound * den), den);
    }

    std::vector<Rational> rationals(std::size_t n, long bound, long max_den = 4) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound, max_den));
        return v;
    }

    std::vector<Rational> integers(std::size_t n, long lo, long hi) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(q(integer(lo, hi)));
        return v;
    }

private:
    std::mt19937_64 rng_;
};

/// Plain loop over the recurrence with exact rationals.
inline std::vector<Rational> iterate_recurrence(const std::vector<Rational>& coeffs,
                                                const std::vector<Rational>& seeds, std::size_t count) {
    std::vector<Rational> x(seeds.begin(), seeds.end());
    const std::size_t n = coeffs.size();
    while (x.size() < count) {
        Rational next;
        for (std::size_t j = 0; j < n; ++j) next += coeffs[j] * x[x.size() - n + j];
        x.push_back(next);
    }
    x.resize(count);
    return x;
}

/// Bisection on a sign change of f over [lo, hi].
inline long double bisect(const std::function<long double(long double)>& f, long double lo, long double hi) {
    long double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const long double mid = (lo + hi) / 2;
        const long double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

inline long double to_ld(const Rational& r) { return to_real<long double>(r); }

}  // namespace golden::testing
