#include "golden/recurrence.hpp"

#include "golden/errors.hpp"

#include <algorithm>

namespace golden {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Maps the state (x_k, ..., x_{k+n-1}) to (x_{k+1}, ..., x_{k+n}).
Matrix companion(const RecurrenceSpec& spec) {
    const std::size_t n = spec.degree();
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r + 1 < n; ++r) m[r][r + 1] = 1;
    for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = spec.coeff(j);
    return m;
}

void require_non_negative(std::int64_t k) {
    if (k < 0) throw OutOfRange("negative term index " + std::to_string(k));
}

}  // namespace

bool RecurrenceSpec::integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

RecurrenceSpec make_spec(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw InvalidSpec("recurrence needs at least one coefficient");
    return RecurrenceSpec(std::move(coeffs));
}

bool SeedVector::integral() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& c) { return is_integer(c); });
}

bool SeedVector::all_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& c) { return c == 0; });
}

Rational SymbolicTerm::evaluate(const SeedVector& seeds) const {
    if (seeds.size() != seed_coeffs.size()) throw SeedLengthMismatch(seed_coeffs.size(), seeds.size());
    Rational sum;
    for (std::size_t j = 0; j < seed_coeffs.size(); ++j) sum += seed_coeffs[j] * seeds[j];
    return sum;
}

void check_seeds(const RecurrenceSpec& spec, const SeedVector& seeds) {
    if (seeds.size() != spec.degree()) throw SeedLengthMismatch(spec.degree(), seeds.size());
}

std::vector<Rational> generate(const RecurrenceSpec& spec, const SeedVector& seeds,
                               std::size_t count) {
    check_seeds(spec, seeds);
    const std::size_t n = spec.degree();
    std::vector<Rational> terms;
    terms.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (k < n) {
            terms.push_back(seeds[k]);
            continue;
        }
        Rational next;
        for (std::size_t j = 0; j < n; ++j) next += spec.coeff(j) * terms[k - n + j];
        terms.push_back(std::move(next));
    }
    return terms;
}

Rational term_at(const RecurrenceSpec& spec, const SeedVector& seeds, std::int64_t k) {
    check_seeds(spec, seeds);
    require_non_negative(k);
    const std::size_t n = spec.degree();
    if (static_cast<std::uint64_t>(k) < n) return seeds[static_cast<std::size_t>(k)];

    Matrix result = identity(n);
    Matrix base = companion(spec);
    for (auto e = static_cast<std::uint64_t>(k); e != 0; e >>= 1U) {
        if (e & 1U) result = multiply(result, base);
        if (e > 1) base = multiply(base, base);
    }
    Rational x;
    for (std::size_t j = 0; j < n; ++j) x += result[0][j] * seeds[j];
    return x;
}

SymbolicTerm symbolic_term(const RecurrenceSpec& spec, std::int64_t k) {
    require_non_negative(k);
    const std::size_t n = spec.degree();
    // window[r] is the linear form for x_{t+r}
    std::vector<std::vector<Rational>> window(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) window[r][r] = 1;
    for (std::int64_t t = 0; t < k; ++t) {
        std::vector<Rational> next(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (spec.coeff(j) == 0) continue;
            for (std::size_t s = 0; s < n; ++s) next[s] += spec.coeff(j) * window[j][s];
        }
        std::rotate(window.begin(), window.begin() + 1, window.end());
        window.back() = std::move(next);
    }
    return SymbolicTerm{std::move(window.front())};
}

}  // namespace golden
