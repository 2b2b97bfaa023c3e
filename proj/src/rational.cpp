#include "golden/rational.hpp"

#include "golden/errors.hpp"

#include <cctype>

namespace golden {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not an exact rational: '" + std::string(original) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(original) + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& value) {
    const Integer& den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

Rational power(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return power(Rational(1) / base, -exponent);
    }
    Rational result(1);
    Rational b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e != 0) b *= b;
    }
    return result;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer result(1);
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace golden
