#pragma once

#include "golden/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

namespace golden {

/// Working precision of the floating paths (roots, Binet, convergence).
/// Standard uses the platform long double, extended a 113-bit software float.
enum class Precision { standard, extended };

using StandardReal = long double;
using ExtendedReal = boost::multiprecision::cpp_bin_float_quad;

static_assert(std::numeric_limits<StandardReal>::digits >= 64,
              "standard precision needs a long double with a 64-bit significand or wider");

template <class Real>
struct ComplexOf;

template <>
struct ComplexOf<StandardReal> {
    using type = std::complex<StandardReal>;
};

template <>
struct ComplexOf<ExtendedReal> {
    using type = boost::multiprecision::cpp_complex_quad;
};

template <class Real>
using Complex = typename ComplexOf<Real>::type;

/// Nearest Real to an exact rational (at most one ulp off).
template <class Real>
Real to_real(const Rational& value) {
    using boost::multiprecision::msb;
    const Integer& num = boost::multiprecision::numerator(value);
    const Integer& den = boost::multiprecision::denominator(value);
    if (num == 0) return Real(0);
    const Integer mag = num < 0 ? Integer(-num) : num;
    const long spread = static_cast<long>(msb(mag)) - static_cast<long>(msb(den));
    const long shift = static_cast<long>(std::numeric_limits<Real>::digits) + 8 - spread;
    Integer quotient = shift >= 0 ? Integer((mag << shift) / den) : Integer(mag / (den << -shift));
    Real r;
    if constexpr (std::is_same_v<Real, StandardReal>) {
        r = std::strtold(quotient.str().c_str(), nullptr);
    } else {
        r = Real(quotient.str());
    }
    using std::ldexp;
    r = ldexp(r, static_cast<int>(-shift));
    return num < 0 ? Real(-r) : r;
}

template <class C>
C ipow(C base, std::uint64_t exponent) {
    C result(1);
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

/// Round-to-nearest integer of a finite Real.
template <class Real>
Integer round_to_integer(const Real& value) {
    using std::floor;
    const Real r = floor(value + Real(0.5));
    std::ostringstream os;
    os << std::fixed << std::setprecision(0) << r;
    std::string s = os.str();
    // some backends ignore the zero precision and print a fractional tail
    if (const auto dot = s.find('.'); dot != std::string::npos) s.erase(dot);
    if (s == "-0") s = "0";
    return Integer(s);
}

template <class Real>
std::string format_real(const Real& value) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<Real>::max_digits10) << value;
    return os.str();
}

template <class Real>
double to_double(const Real& value) {
    return static_cast<double>(value);
}

}  // namespace golden
