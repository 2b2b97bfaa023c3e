#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace golden;
using namespace golden::testing;

namespace {

using C = std::complex<long double>;

const RecurrenceSpec kFib = make_spec(qs({1, 1}));
const RecurrenceSpec kPell = make_spec(qs({1, 2}));
const RecurrenceSpec kTrib = make_spec(qs({1, 1, 1}));

}  // namespace

TEST_CASE("solve_weights: Fibonacci and Lucas") {
    const auto roots = quadratic_roots<StandardReal>(q(1), q(1));
    const long double s5 = std::sqrt(5.0L);

    const auto fib = solve_weights(kFib, seeds_of({0, 1}), roots);
    REQUIRE(fib.weights.size() == 3);
    CHECK(std::abs(fib.weights[0] - C(1 / s5, 0)) < 1e-15L);
    CHECK(std::abs(fib.weights[1] - C(-1 / s5, 0)) < 1e-15L);
    CHECK(fib.constant_vanishes());

    const auto lucas = solve_weights(kFib, seeds_of({2, 1}), roots);
    CHECK(std::abs(lucas.weights[0] - C(1, 0)) < 1e-9L);
    CHECK(std::abs(lucas.weights[1] - C(1, 0)) < 1e-9L);
    CHECK(std::abs(lucas.weights[2]) < 1e-9L);
}

TEST_CASE("solve_weights: tribonacci fit reproduces the first terms") {
    const auto roots = general_roots<StandardReal>(kTrib);
    const SeedVector seeds = seeds_of({0, 1, 1});
    const auto w = solve_weights(kTrib, seeds, roots);
    REQUIRE(w.weights.size() == 4);
    CHECK(std::abs(w.constant_term()) <= 1e-10L);
    const auto exact = generate(kTrib, seeds, 4);
    for (std::int64_t k = 0; k <= 3; ++k) {
        const auto v = binet_eval(w, roots, k);
        REQUIRE(v.rounded);
        CHECK(Rational(*v.rounded) == exact[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("solve_weights errors") {
    // (x - 1)^2: repeated root
    const auto rep = make_spec(qs({-1, 2}));
    CHECK_THROWS_AS(solve_weights(rep, seeds_of({0, 1}), general_roots<StandardReal>(rep)), DegenerateSpectrum);
    // x^2 = x has root 1, duplicating the constant column
    const auto unit = make_spec(qs({0, 1}));
    try {
        solve_weights(unit, seeds_of({0, 1}), general_roots<StandardReal>(unit));
        FAIL("expected a numerical error");
    } catch (const NumericalError& e) {
        CHECK(std::isinf(e.condition_estimate()));
    }
    CHECK_THROWS_AS(solve_weights(kFib, seeds_of({0, 1, 2}), quadratic_roots<StandardReal>(q(1), q(1))),
                    SeedLengthMismatch);
}

TEST_CASE("binet_eval") {
    const auto roots = general_roots<StandardReal>(kFib);
    const auto fib = solve_weights(kFib, seeds_of({0, 1}), roots);
    CHECK(*binet_eval(fib, roots, 10).rounded == 55);
    CHECK(*binet_eval(fib, roots, 0).rounded == 0);
    const auto lucas = solve_weights(kFib, seeds_of({2, 1}), roots);
    CHECK(*binet_eval(lucas, roots, 4).rounded == 7);
    CHECK(*binet_eval(lucas, roots, 0).rounded == 2);

    // non-integral inputs carry no rounding
    const auto half = make_spec({q(1, 2), q(1, 3)});
    const auto hr = general_roots<StandardReal>(half);
    const auto hw = solve_weights(half, SeedVector{{q(1, 5), q(2)}}, hr);
    CHECK_FALSE(binet_eval(hw, hr, 3).rounded.has_value());
    CHECK_THROWS_AS(binet_eval(hw, hr, -1), OutOfRange);
}

TEST_CASE("integer presets round to the exact terms up to k = 40") {
    struct Case {
        RecurrenceSpec spec;
        SeedVector seeds;
    };
    const Case cases[] = {{kFib, seeds_of({0, 1})}, {kFib, seeds_of({2, 1})}, {kPell, seeds_of({0, 1})},
                          {kTrib, seeds_of({0, 1, 1})}};
    for (const auto& c : cases) {
        const auto roots = general_roots<StandardReal>(c.spec);
        const auto w = solve_weights(c.spec, c.seeds, roots);
        const auto agreement = compare_with_recurrence(c.spec, c.seeds, w, roots, 40);
        CHECK(agreement.passes());
        CHECK(agreement.max_imaginary <= 1e-6L);
    }
}

TEST_CASE("extended precision reaches k = 70") {
    const auto roots = general_roots<ExtendedReal>(kPell);
    const auto w = solve_weights(kPell, seeds_of({0, 1}), roots);
    const auto agreement = compare_with_recurrence(kPell, seeds_of({0, 1}), w, roots, max_checked_index<ExtendedReal>());
    CHECK(agreement.passes());
    // Pell beyond k = 40 overflows the long double significand
    const auto standard_roots = general_roots<StandardReal>(kPell);
    const auto standard = compare_with_recurrence(kPell, seeds_of({0, 1}), solve_weights(kPell, seeds_of({0, 1}), standard_roots), standard_roots, 70);
    CHECK_FALSE(standard.passes());
    CHECK(max_checked_index<ExtendedReal>() == 70);
}

TEST_CASE("binet_quadratic_closed") {
    const long double s5 = std::sqrt(5.0L);
    const long double phi = (1 + s5) / 2, varphi = (1 - s5) / 2;
    for (std::int64_t k = 0; k <= 20; ++k) {
        const auto fib = binet_quadratic_closed<StandardReal>(q(1), q(1), seeds_of({0, 1}), k);
        CHECK(std::abs(fib - C((std::pow(phi, k) - std::pow(varphi, k)) / s5, 0)) < 1e-12L);
        const auto lucas = binet_quadratic_closed<StandardReal>(q(1), q(1), seeds_of({2, 1}), k);
        CHECK(std::abs(lucas - C(std::pow(phi, k) + std::pow(varphi, k), 0)) < 1e-12L);
    }
    CHECK(binet_quadratic_closed<StandardReal>(q(3), q(-1, 2), SeedVector{{q(7, 3), q(1)}}, 0) ==
          C(to_ld(q(7, 3)), 0));
    CHECK_THROWS_AS(binet_quadratic_closed<StandardReal>(q(2), q(-1), seeds_of({0, 1}), 3), DegenerateSpectrum);
}

TEST_CASE("property: quadratic closed form equals the weight solve") {
    Generator gen(2024);
    int tested = 0;
    while (tested < 80) {
        const auto a = gen.rational(4), b = gen.rational(4);
        const auto spec = make_spec({b, a});
        if (a * a + 4 * b == 0 || has_unit_root(spec)) continue;
        const SeedVector seeds{gen.rationals(2, 5)};
        const auto roots = general_roots<StandardReal>(spec);
        BinetWeights w;
        try {
            w = solve_weights(spec, seeds, roots);
        } catch (const Error&) {
            continue;
        }
        ++tested;
        for (std::int64_t k = 0; k <= 30; ++k) {
            const auto closed = binet_quadratic_closed<StandardReal>(a, b, seeds, k);
            const auto generic = binet_eval(w, roots, k).value;
            const long double scale = std::max(1.0L, std::abs(generic));
            CHECK(std::abs(closed - generic) <= 1e-9L * scale);
        }
    }
}

TEST_CASE("binet_cubic_closed: closed form is checked against the exact term") {
    const auto seeds = seeds_of({0, 1, 1});
    const auto exact = generate(kTrib, seeds, 11);
    for (std::int64_t k = 0; k <= 10; ++k) {
        const auto r = binet_cubic_closed<StandardReal>(q(1), q(1), q(1), seeds, k);
        CHECK(r.expected == exact[static_cast<std::size_t>(k)]);
        // either it reproduces the term or it says so
        const bool reproduces = std::abs(r.value - C(to_ld(r.expected), 0)) <=
                                1e-6L * std::max(1.0L, std::abs(to_ld(r.expected)));
        CHECK(reproduces == r.matches);
    }
    // at k = 1 the closed form gives -0.5437 instead of x_1 = 1
    const auto k1 = binet_cubic_closed<StandardReal>(q(1), q(1), q(1), seeds, 1);
    CHECK(k1.expected == 1);
    CHECK_FALSE(k1.matches);

    CHECK_THROWS_AS(binet_cubic_closed<StandardReal>(q(1), q(-1), q(1), seeds, 2), DivisionHazard);
    CHECK_THROWS_AS(binet_cubic_closed<StandardReal>(q(0), q(3), q(-2), seeds, 2), DegenerateSpectrum);
}

TEST_CASE("property: constant weight vanishes and Binet matches the recurrence") {
    Generator gen(77);
    int tested = 0;
    while (tested < 60) {
        const auto n = static_cast<std::size_t>(gen.integer(2, 4));
        const auto spec = make_spec(gen.integers(n, -4, 4));
        if (spec.degenerate() || has_repeated_roots(spec) || has_unit_root(spec)) continue;
        const SeedVector seeds{gen.integers(n, -5, 5)};
        const auto roots = general_roots<StandardReal>(spec);
        const auto dom = dominant_root(roots);
        BinetWeights w;
        try {
            w = solve_weights(spec, seeds, roots);
        } catch (const DegenerateSpectrum&) {
            continue;
        }
        ++tested;
        CHECK(w.constant_vanishes());
        if (!dom.unique) continue;
        // rounding to the exact integer needs |x_k| well inside the significand
        using boost::multiprecision::abs;
        const Rational x40 = abs(term_at(spec, seeds, 40));
        if (x40 < Rational(Integer("100000000000000000"))) {
            const auto agreement = compare_with_recurrence(spec, seeds, w, roots, 40);
            CHECK_MESSAGE(agreement.passes(), to_string(spec.coeff(0)) << "," << to_string(spec.coeff(1)) << " n=" << n
                                                  << " seeds " << to_string(seeds[0]) << "," << to_string(seeds[1])
                                                  << " k=" << agreement.first_mismatch.value_or(-1)
                                                  << " cond=" << w.condition_estimate);
        }
        if (x40 < Rational(Integer("1000000000000000000000000000000"))) {
            const auto xr = general_roots<ExtendedReal>(spec);
            const auto xw = solve_weights(spec, seeds, xr);
            CHECK(compare_with_recurrence(spec, seeds, xw, xr, 40).passes());
        }
    }
}
