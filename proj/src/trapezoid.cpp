#include "golden/trapezoid.hpp"

#include "golden/errors.hpp"
#include "golden/genfunc.hpp"

namespace golden {

namespace {

// c * binom * alpha^ea * beta^eb * gamma^eg, skipped when the binomial factor
// vanishes so that formally negative exponents are never evaluated.
Rational monomial(const Integer& binom, const Rational& alpha, long ea, const Rational& beta, long eb,
                  const Rational& gamma = Rational(1), long eg = 0) {
    if (binom == 0) return Rational(0);
    return Rational(binom) * power(alpha, ea) * power(beta, eb) * power(gamma, eg);
}

void check_entry(long i, long j, long last) {
    if (i < 0 || j < 0 || j > last)
        throw OutOfRange("trapezoid entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range");
}

}  // namespace

Rational Trapezoid::at(long i, long j) const {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= rows.size()) return Rational(0);
    const auto& row = rows[static_cast<std::size_t>(i)];
    return static_cast<std::size_t>(j) < row.size() ? row[static_cast<std::size_t>(j)] : Rational(0);
}

Trapezoid build_expansion(const RecurrenceSpec& spec, const SeedVector& seeds, std::size_t num_rows) {
    if (num_rows == 0) throw OutOfRange("trapezoid needs at least one row");
    const auto gf = build_genfunc(spec, seeds);
    const std::size_t n = spec.degree();
    Trapezoid t{spec, seeds, TrapezoidMethod::expansion, {}};
    t.rows.reserve(num_rows);
    Polynomial product = gf.numerator;  // T * R^i
    for (std::size_t i = 0; i < num_rows; ++i) {
        if (i > 0) product = product * gf.denominator_tail;
        std::vector<Rational> row(row_length(i, n));
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = product.coeff(i + j);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Rational coeff_quadratic(long i, long j, const Rational& alpha, const Rational& beta,
                         const SeedVector& seeds) {
    if (seeds.size() != 2) throw SeedLengthMismatch(2, seeds.size());
    check_entry(i, j, i + 1);
    const Rational& x0 = seeds[0];
    const Rational& x1 = seeds[1];
    // alpha^{i-j} beta^{j-1} {[C(i,j) beta - C(i,j-1) alpha^2] x0 + C(i,j-1) alpha x1}
    return monomial(binomial(i, j), alpha, i - j, beta, j) * x0 -
           monomial(binomial(i, j - 1), alpha, i - j + 2, beta, j - 1) * x0 +
           monomial(binomial(i, j - 1), alpha, i - j + 1, beta, j - 1) * x1;
}

Rational coeff_cubic(long i, long j, const Rational& alpha, const Rational& beta,
                     const Rational& gamma, const SeedVector& seeds) {
    if (seeds.size() != 3) throw SeedLengthMismatch(3, seeds.size());
    check_entry(i, j, 2 * i + 2);
    const Rational& x0 = seeds[0];
    const Rational& x1 = seeds[1];
    const Rational& x2 = seeds[2];
    // Kronecker-delta selection of j/2 or (j-1)/2 is floor(j/2)
    const long m = j / 2;
    Rational sum;
    for (long k = 0; k <= m; ++k) {
        // common factor alpha^{i-j+k} beta^{j-2-2k} gamma^k folded into each monomial
        const long ea = i - j + k;
        const long eb = j - 2 - 2 * k;
        const Integer b2 = binomial(j - k - 2, k) * binomial(i, j - k - 2);
        const Integer b1 = binomial(j - k - 1, k) * binomial(i, j - k - 1);
        const Integer b0 = binomial(j - k, k) * binomial(i, j - k);
        const Integer b0_alt = binomial(i - k + 1, j - 2 * k - 1) * binomial(i, i - k);

        sum += monomial(b2, alpha, ea + 2, beta, eb, gamma, k) * x2;
        sum += (monomial(b1, alpha, ea + 1, beta, eb + 1, gamma, k) -
                monomial(b2, alpha, ea + 3, beta, eb, gamma, k)) *
               x1;
        sum += (monomial(b0, alpha, ea, beta, eb + 2, gamma, k) -
                monomial(b0_alt, alpha, ea + 2, beta, eb + 1, gamma, k)) *
               x0;
    }
    return sum;
}

Trapezoid build_closed_form(const RecurrenceSpec& spec, const SeedVector& seeds, std::size_t num_rows) {
    check_seeds(spec, seeds);
    if (num_rows == 0) throw OutOfRange("trapezoid needs at least one row");
    const std::size_t n = spec.degree();
    if (n != 2 && n != 3) throw InvalidSpec("closed-form trapezoid entries exist only for degree 2 and 3");
    Trapezoid t{spec, seeds, TrapezoidMethod::closed_form, {}};
    for (std::size_t i = 0; i < num_rows; ++i) {
        std::vector<Rational> row(row_length(i, n));
        for (std::size_t j = 0; j < row.size(); ++j) {
            const long li = static_cast<long>(i), lj = static_cast<long>(j);
            row[j] = n == 2 ? coeff_quadratic(li, lj, spec.coeff(1), spec.coeff(0), seeds)
                            : coeff_cubic(li, lj, spec.coeff(2), spec.coeff(1), spec.coeff(0), seeds);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

ClosedFormReport compare_closed_form(const RecurrenceSpec& spec, const SeedVector& seeds,
                                     std::size_t num_rows) {
    const Trapezoid expected = build_expansion(spec, seeds, num_rows);
    const Trapezoid closed = build_closed_form(spec, seeds, num_rows);
    ClosedFormReport report;
    for (std::size_t i = 0; i < num_rows; ++i)
        for (std::size_t j = 0; j < expected.rows[i].size(); ++j) {
            ++report.entries_checked;
            if (closed.rows[i][j] == expected.rows[i][j]) continue;
            ++report.mismatches;
            if (!report.first)
                report.first = Divergence{static_cast<long>(i), static_cast<long>(j), closed.rows[i][j],
                                          expected.rows[i][j]};
        }
    return report;
}

std::vector<RowViolation> check_row_recurrence(const Trapezoid& t) {
    std::vector<RowViolation> out;
    const long n = static_cast<long>(t.degree());
    for (std::size_t next = 1; next < t.rows.size(); ++next) {
        const long i = static_cast<long>(next) - 1;
        for (long col = 0; col < static_cast<long>(t.rows[next].size()); ++col) {
            const long j = col - (n - 1);
            Rational predicted;
            for (long k = 0; k < n; ++k) predicted += t.spec.coeff(static_cast<std::size_t>(k)) * t.at(i, j + k);
            const Rational& actual = t.rows[next][static_cast<std::size_t>(col)];
            if (predicted != actual) out.push_back({i, col, predicted, actual});
        }
    }
    return out;
}

Rational row_sum(std::size_t i, const RecurrenceSpec& spec, const SeedVector& seeds) {
    check_seeds(spec, seeds);
    const long n = static_cast<long>(spec.degree());
    auto alpha = [&](long j) { return spec.coeff(static_cast<std::size_t>(j)); };
    Rational weight;
    for (long r = 0; r <= n - 1; ++r) {
        Rational inner;
        for (long l = r; l <= n - 2; ++l) inner += alpha(n + r - l - 1);
        weight += (1 - inner) * seeds[static_cast<std::size_t>(r)];
    }
    Rational total;
    for (const auto& a : spec.coeffs()) total += a;
    return weight * power(total, static_cast<long>(i));
}

Rational direct_row_sum(const Trapezoid& t, std::size_t i) {
    if (i >= t.rows.size()) throw OutOfRange("row " + std::to_string(i) + " not present");
    Rational s;
    for (const auto& c : t.rows[i]) s += c;
    return s;
}

Rational diagonal_sum(const Trapezoid& t, std::size_t i) {
    if (t.rows.size() < i + 1)
        throw OutOfRange("diagonal " + std::to_string(i) + " needs " + std::to_string(i + 1) + " rows, have " +
                         std::to_string(t.rows.size()));
    Rational s;
    for (long j = 0; j <= static_cast<long>(i); ++j) s += t.at(static_cast<long>(i) - j, j);
    return s;
}

Trapezoid drop_zero_layer(const Trapezoid& t) {
    Trapezoid out = t;
    for (auto& row : out.rows) {
        if (row.front() != 0) throw InvalidSpec("leftmost layer is not zero");
        row.erase(row.begin());
    }
    return out;
}

}  // namespace golden
