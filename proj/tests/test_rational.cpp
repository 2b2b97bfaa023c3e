#include "support.hpp"

#include <doctest.h>

using namespace golden;
using golden::testing::q;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational(" -3/6 ") == q(-1, 2));
    CHECK(parse_rational("+4/2") == 2);
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects floats and malformed input") {
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("--1"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("rational lists and canonical text") {
    const auto v = parse_rational_list("1, -2/4,3");
    REQUIRE(v.size() == 3);
    CHECK(to_string(v[1]) == "-1/2");
    CHECK(to_string(v[2]) == "3");
    CHECK(parse_rational_list("").empty());
    CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
}

TEST_CASE("power and binomial") {
    CHECK(power(q(2, 3), 3) == q(8, 27));
    CHECK(power(q(2, 3), -2) == q(9, 4));
    CHECK(power(q(0), 0) == 1);
    CHECK_THROWS(power(q(0), -1));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("to_real is accurate to the last bit") {
    const long double third = to_real<long double>(q(1, 3));
    CHECK(third == 1.0L / 3.0L);
    const auto big = to_real<long double>(Rational(Integer("12586269025")));
    CHECK(big == 12586269025.0L);
    CHECK(to_real<ExtendedReal>(q(-7, 8)) == ExtendedReal(-0.875));
}

TEST_CASE("polynomial gcd detects shared factors") {
    // (z - 1)^2 (z + 2)
    const Polynomial p({q(2), q(-3), q(0), q(1)});
    CHECK(gcd(p, p.derivative()) == Polynomial({q(-1), q(1)}));
    const Polynomial r({q(-1), q(-1), q(1)});
    CHECK(gcd(r, r.derivative()).degree() == 0);
    CHECK(render(Polynomial({q(1), q(-1), q(-1)})) == "1 - z - z^2");
    CHECK(render(Polynomial({q(0), q(3, 2)}), true) == "(3/2)z");
}
