#include "golden/cli/app.hpp"

#include "golden/analysis.hpp"
#include "golden/binet.hpp"
#include "golden/cli/presets.hpp"
#include "golden/cli/verify.hpp"
#include "golden/errors.hpp"
#include "golden/genfunc.hpp"
#include "golden/roots.hpp"
#include "golden/trapezoid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace golden::cli {

using golden::to_string;

namespace {

using Json = nlohmann::ordered_json;

// Parsed flags shared by every subcommand. Flags a command does not use are not registered on it.
struct Options {
    std::string coeffs;
    std::string seeds;
    std::string preset;
    std::string presets_file;
    std::string format = "text";
    std::string precision = "standard";
    std::size_t count = 10;
    std::size_t rows = 6;
    std::int64_t k = -1;
    std::string method = "expansion";
    bool unicode = false;
};

struct Input {
    RecurrenceSpec spec;
    SeedVector seeds;
};

class UsageError : public Error {
    using Error::Error;
};

std::string join(const std::vector<Rational>& values, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += to_string(values[i]);
    }
    return s;
}

Json strings(const std::vector<Rational>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(to_string(v));
    return a;
}

std::vector<Rational> coeff_vector(const RecurrenceSpec& spec) {
    const auto c = spec.coeffs();
    return {c.begin(), c.end()};
}

Json echo(const Input& in) {
    Json j;
    j["coeffs"] = strings(coeff_vector(in.spec));
    j["seeds"] = strings(in.seeds.values);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

template <class Real>
std::string format_complex(const Complex<Real>& z) {
    const Real im = z.imag();
    std::string s = format_real(Real(z.real()));
    if (im < 0) return s + " - " + format_real(Real(-im)) + "i";
    return s + " + " + format_real(im) + "i";
}

Input resolve(const Options& o) {
    const bool have_preset = !o.preset.empty();
    const bool have_coeffs = !o.coeffs.empty();
    if (have_preset && have_coeffs) throw UsageError("--preset and --coeffs are mutually exclusive");
    if (!have_preset && !have_coeffs) throw UsageError("one of --preset or --coeffs is required");

    std::optional<std::string> file;
    if (!o.presets_file.empty()) file = o.presets_file;
    const auto store = load_presets(file);

    std::vector<Rational> coeffs, seeds;
    if (have_preset) {
        const Preset* p = store.find(o.preset);
        if (!p) throw UsageError("unknown preset '" + o.preset + "'");
        coeffs = p->coeffs;
        seeds = p->seeds;
    } else {
        coeffs = parse_rational_list(o.coeffs);
        // the unit seed vector (0, ..., 0, 1) gives the fundamental solution
        seeds.assign(coeffs.size(), Rational(0));
        if (!seeds.empty()) seeds.back() = 1;
    }
    if (!o.seeds.empty()) seeds = parse_rational_list(o.seeds);

    Input in{make_spec(std::move(coeffs)), SeedVector{std::move(seeds)}};
    check_seeds(in.spec, in.seeds);
    return in;
}

bool extended(const Options& o) { return o.precision == "extended"; }

int cmd_seq(const Options& o, std::ostream& out) {
    const auto in = resolve(o);
    const auto terms = generate(in.spec, in.seeds, o.count);
    if (o.format == "json") {
        Json j = echo(in);
        j["terms"] = strings(terms);
        out << j.dump(2) << '\n';
    } else if (!terms.empty()) {
        out << join(terms, o.format == "csv" ? "," : " ") << '\n';
    }
    return kExitOk;
}

int cmd_term(const Options& o, std::ostream& out) {
    const auto in = resolve(o);
    if (o.k < 0) throw UsageError("term needs --k with k >= 0");
    const auto value = term_at(in.spec, in.seeds, o.k);
    if (o.format == "json") {
        Json j = echo(in);
        j["k"] = std::to_string(o.k);
        j["term"] = to_string(value);
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << o.k << ',' << to_string(value) << '\n';
    } else {
        out << to_string(value) << '\n';
    }
    return kExitOk;
}

template <class Real>
int cmd_roots(const Options& o, const Input& in, std::ostream& out) {
    const auto roots = general_roots<Real>(in.spec);
    const auto dom = dominant_root(roots);
    using std::abs;
    if (o.format == "json") {
        Json j = echo(in);
        j["precision"] = o.precision;
        Json list = Json::array();
        for (std::size_t i = 0; i < roots.roots.size(); ++i) {
            const auto& r = roots.roots[i];
            list.push_back({{"re", format_real(Real(r.real()))},
                            {"im", format_real(Real(r.imag()))},
                            {"modulus", format_real(Real(abs(r)))},
                            {"residual", format_real(roots.residuals[i])}});
        }
        j["roots"] = list;
        j["dominant_index"] = dom.index;
        j["dominance_unique"] = dom.unique;
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        for (std::size_t i = 0; i < roots.roots.size(); ++i) {
            const auto& r = roots.roots[i];
            out << format_real(Real(r.real())) << ',' << format_real(Real(r.imag())) << ','
                << format_real(Real(abs(r))) << ',' << format_real(roots.residuals[i]) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < roots.roots.size(); ++i) {
            const auto& r = roots.roots[i];
            out << "r" << i + 1 << " = " << format_complex<Real>(r) << "   |r| = " << format_real(Real(abs(r)))
                << "   residual = " << format_real(roots.residuals[i]) << '\n';
        }
        out << "dominant: r" << dom.index + 1 << (dom.unique ? " (unique)" : " (tied in modulus)") << '\n';
    }
    return kExitOk;
}

template <class Real>
int cmd_binet(const Options& o, const Input& in, std::ostream& out) {
    const auto roots = general_roots<Real>(in.spec);
    const auto w = solve_weights(in.spec, in.seeds, roots);
    std::optional<BinetValue<Real>> value;
    if (o.k >= 0) value = binet_eval(w, roots, o.k);
    const std::size_t n = roots.roots.size();

    if (o.format == "json") {
        Json j = echo(in);
        j["precision"] = o.precision;
        Json list = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            list.push_back({{"root_re", format_real(Real(roots.roots[i].real()))},
                            {"root_im", format_real(Real(roots.roots[i].imag()))},
                            {"weight_re", format_real(Real(w.weights[i].real()))},
                            {"weight_im", format_real(Real(w.weights[i].imag()))}});
        }
        j["weights"] = list;
        j["constant_re"] = format_real(Real(w.constant_term().real()));
        j["constant_im"] = format_real(Real(w.constant_term().imag()));
        j["constant_vanishes"] = w.constant_vanishes();
        j["condition_estimate"] = format_real(w.condition_estimate);
        if (value) {
            j["k"] = std::to_string(o.k);
            j["value_re"] = format_real(Real(value->value.real()));
            j["value_im"] = format_real(Real(value->value.imag()));
            if (value->rounded) j["rounded"] = value->rounded->str();
        }
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        for (std::size_t i = 0; i <= n; ++i) {
            const auto& wi = w.weights[i];
            out << format_real(Real(wi.real())) << ',' << format_real(Real(wi.imag())) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            out << "w" << i + 1 << " = " << format_complex<Real>(w.weights[i]) << "   for root "
                << format_complex<Real>(roots.roots[i]) << '\n';
        out << "constant = " << format_complex<Real>(w.constant_term())
            << (w.constant_vanishes() ? "   (vanishes)" : "   (does not vanish)") << '\n';
        out << "condition = " << format_real(w.condition_estimate) << '\n';
        if (value) {
            out << "x_" << o.k << " ~ " << format_complex<Real>(value->value);
            if (value->rounded) out << "   rounded " << value->rounded->str();
            out << '\n';
        }
    }
    return kExitOk;
}

int cmd_genfunc(const Options& o, std::ostream& out) {
    const auto in = resolve(o);
    const auto gf = build_genfunc(in.spec, in.seeds);
    const auto dense = [](const Polynomial& p) {
        std::vector<Rational> c;
        for (long i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(static_cast<std::size_t>(i)));
        return c;
    };
    if (o.format == "json") {
        Json j = echo(in);
        j["numerator"] = strings(dense(gf.numerator));
        j["denominator"] = strings(dense(gf.denominator()));
        j["display"] = gf.to_string(o.unicode);
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << join(dense(gf.numerator), ",") << '\n' << join(dense(gf.denominator()), ",") << '\n';
    } else {
        out << gf.to_string(o.unicode) << '\n';
    }
    return kExitOk;
}

void print_rows(const Options& o, const std::vector<std::vector<Rational>>& rows, const Input& in, std::ostream& out) {
    if (o.format == "json") {
        Json j = echo(in);
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(strings(r));
        j["rows"] = list;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& r : rows) out << join(r, o.format == "csv" ? "," : " ") << '\n';
}

int cmd_trapezoid(const Options& o, std::ostream& out, std::ostream& err) {
    const auto in = resolve(o);
    if (o.method == "expansion") {
        print_rows(o, build_expansion(in.spec, in.seeds, o.rows).rows, in, out);
        return kExitOk;
    }
    const auto closed = build_closed_form(in.spec, in.seeds, o.rows);
    print_rows(o, closed.rows, in, out);
    const auto report = compare_closed_form(in.spec, in.seeds, o.rows);
    if (report.matches()) return kExitOk;
    const auto& d = *report.first;
    err << "formula mismatch: closed form gives " << to_string(d.closed_form) << " at (i, j) = (" << d.i << ", "
        << d.j << ") where the expansion has " << to_string(d.expansion) << "; " << report.mismatches
        << " entries differ\n";
    return kExitVerificationFailed;
}

int cmd_rowsum(const Options& o, std::ostream& out) {
    const auto in = resolve(o);
    const auto t = build_expansion(in.spec, in.seeds, o.rows);
    bool ok = true;
    Json list = Json::array();
    for (std::size_t i = 0; i < o.rows; ++i) {
        const auto closed = row_sum(i, in.spec, in.seeds);
        const auto direct = direct_row_sum(t, i);
        ok = ok && closed == direct;
        if (o.format == "json") {
            list.push_back({{"i", std::to_string(i)}, {"closed_form", to_string(closed)}, {"direct", to_string(direct)}});
        } else {
            const char* sep = o.format == "csv" ? "," : " ";
            out << i << sep << to_string(closed) << sep << to_string(direct) << '\n';
        }
    }
    if (o.format == "json") {
        Json j = echo(in);
        j["rows"] = list;
        out << j.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

template <class Real>
int cmd_converge(const Options& o, const Input& in, std::ostream& out) {
    const std::int64_t k_max = o.k < 0 ? 60 : o.k;
    const auto r = ratio_convergence<Real>(in.spec, in.seeds, k_max);
    if (o.format == "json") {
        Json j = echo(in);
        j["precision"] = o.precision;
        j["estimate"] = format_real(r.final_estimate);
        j["target_re"] = format_real(Real(r.target.real()));
        j["target_im"] = format_real(Real(r.target.imag()));
        j["abs_error"] = format_real(r.abs_error);
        j["converged"] = r.converged;
        j["cause"] = describe(r.cause);
        j["k_used"] = std::to_string(r.k_used);
        Json list = Json::array();
        for (const auto& s : r.ratios) list.push_back({{"k", std::to_string(s.k)}, {"ratio", format_real(s.value)}});
        j["ratios"] = list;
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        for (const auto& s : r.ratios) out << s.k << ',' << format_real(s.value) << '\n';
    } else {
        out << "estimate = " << format_real(r.final_estimate) << '\n'
            << "target   = " << format_complex<Real>(r.target) << '\n'
            << "error    = " << format_real(r.abs_error) << '\n'
            << (r.converged ? "converged" : "not converged (" + describe(r.cause) + ")") << " by k = " << r.k_used
            << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto in = resolve(o);
    VerifyOptions v;
    v.rows = o.rows;
    if (o.k >= 0) v.binet_k = o.k;
    v.precision = extended(o) ? Precision::extended : Precision::standard;
    const auto reports = verify_all(in.spec, in.seeds, v);

    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& r : reports) {
            list.push_back({{"check", r.check},
                            {"status", to_string(r.status)},
                            {"residual", r.residual},
                            {"note", r.note},
                            {"inputs", {{"coeffs", strings(r.coeffs)}, {"seeds", strings(r.seeds)}}}});
        }
        out << list.dump(2) << '\n';
    } else if (o.format == "csv") {
        for (const auto& r : reports)
            out << r.check << ',' << to_string(r.status) << ',' << csv_field(r.residual) << ',' << csv_field(r.note)
                << '\n';
    } else {
        std::size_t width = 0;
        for (const auto& r : reports) width = std::max(width, r.check.size());
        for (const auto& r : reports) {
            std::string status = to_string(r.status);
            status.resize(8, ' ');
            std::string check = r.check;
            check.resize(width + 2, ' ');
            out << status << check << r.residual;
            if (!r.note.empty()) out << (r.residual.empty() ? "" : "   ") << r.note;
            out << '\n';
        }
    }
    return all_passed(reports) ? kExitOk : kExitVerificationFailed;
}

int cmd_presets(const Options& o, std::ostream& out) {
    std::optional<std::string> file;
    if (!o.presets_file.empty()) file = o.presets_file;
    const auto store = load_presets(file);
    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& p : store.all())
            list.push_back({{"name", p.name},
                            {"coeffs", strings(p.coeffs)},
                            {"seeds", strings(p.seeds)},
                            {"description", p.description}});
        out << list.dump(2) << '\n';
    } else if (o.format == "csv") {
        for (const auto& p : store.all())
            out << p.name << ',' << csv_field(join(p.coeffs, ",")) << ',' << csv_field(join(p.seeds, ",")) << ','
                << csv_field(p.description) << '\n';
    } else {
        for (const auto& p : store.all())
            out << p.name << "  coeffs " << join(p.coeffs, ",") << "  seeds " << join(p.seeds, ",") << "  "
                << p.description << '\n';
    }
    return kExitOk;
}

template <template <class> class Fn>
int numeric(const Options& o, std::ostream& out) {
    const auto in = resolve(o);
    if (extended(o)) return Fn<ExtendedReal>{}(o, in, out);
    return Fn<StandardReal>{}(o, in, out);
}

template <class Real>
struct RootsFn {
    int operator()(const Options& o, const Input& in, std::ostream& out) const { return cmd_roots<Real>(o, in, out); }
};
template <class Real>
struct BinetFn {
    int operator()(const Options& o, const Input& in, std::ostream& out) const { return cmd_binet<Real>(o, in, out); }
};
template <class Real>
struct ConvergeFn {
    int operator()(const Options& o, const Input& in, std::ostream& out) const {
        return cmd_converge<Real>(o, in, out);
    }
};

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("--coeffs", o.coeffs, "recurrence coefficients a0,a1,... (a0 multiplies x_k)");
    sub->add_option("--seeds", o.seeds, "initial terms x0,x1,... (default 0,...,0,1)");
    sub->add_option("--preset", o.preset, "named preset instead of --coeffs");
    sub->add_option("--presets-file", o.presets_file, "extra presets file");
}

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_precision(CLI::App* sub, Options& o) {
    sub->add_option("--precision", o.precision, "floating-point precision")
        ->check(CLI::IsMember({"standard", "extended"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalised Fibonacci sequences: terms, roots, Binet weights, generating functions, trapezoids",
                 "golden"};
    app.require_subcommand(1);
    app.fallthrough(false);
    Options o;

    auto* seq = app.add_subcommand("seq", "first --count terms");
    add_input(seq, o);
    add_format(seq, o);
    seq->add_option("--count", o.count, "number of terms");

    auto* term = app.add_subcommand("term", "single term x_k by matrix power");
    add_input(term, o);
    add_format(term, o);
    term->add_option("--k", o.k, "index")->required();

    auto* roots = app.add_subcommand("roots", "roots of the characteristic polynomial");
    add_input(roots, o);
    add_format(roots, o);
    add_precision(roots, o);

    auto* binet = app.add_subcommand("binet", "Binet weights, optionally evaluated at --k");
    add_input(binet, o);
    add_format(binet, o);
    add_precision(binet, o);
    binet->add_option("--k", o.k, "index to evaluate");

    auto* genfunc = app.add_subcommand("genfunc", "generating function T(z)/(1 - R(z))");
    add_input(genfunc, o);
    add_format(genfunc, o);
    genfunc->add_flag("--unicode", o.unicode, "use unicode minus signs and superscripts");

    auto* trapezoid = app.add_subcommand("trapezoid", "coefficient table of T(z) R(z)^i");
    add_input(trapezoid, o);
    add_format(trapezoid, o);
    trapezoid->add_option("--rows", o.rows, "number of rows");
    trapezoid->add_option("--method", o.method, "expansion or closed")->check(CLI::IsMember({"expansion", "closed"}));

    auto* rowsum = app.add_subcommand("rowsum", "row sums: closed form against direct sum");
    add_input(rowsum, o);
    add_format(rowsum, o);
    rowsum->add_option("--rows", o.rows, "number of rows");

    auto* converge = app.add_subcommand("converge", "ratio x_{k+1}/x_k against the dominant root");
    add_input(converge, o);
    add_format(converge, o);
    add_precision(converge, o);
    converge->add_option("--k", o.k, "largest index used (default 60)");

    auto* verify = app.add_subcommand("verify", "run every cross-check");
    add_input(verify, o);
    add_format(verify, o);
    add_precision(verify, o);
    verify->add_option("--rows", o.rows, "trapezoid depth")->default_val(8);
    verify->add_option("--k", o.k, "largest Binet index checked");

    auto* presets = app.add_subcommand("presets", "list presets");
    presets->add_option("--presets-file", o.presets_file, "extra presets file");
    add_format(presets, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (seq->parsed()) return cmd_seq(o, out);
        if (term->parsed()) return cmd_term(o, out);
        if (roots->parsed()) return numeric<RootsFn>(o, out);
        if (binet->parsed()) return numeric<BinetFn>(o, out);
        if (genfunc->parsed()) return cmd_genfunc(o, out);
        if (trapezoid->parsed()) return cmd_trapezoid(o, out, err);
        if (rowsum->parsed()) return cmd_rowsum(o, out);
        if (converge->parsed()) return numeric<ConvergeFn>(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (presets->parsed()) return cmd_presets(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace golden::cli
