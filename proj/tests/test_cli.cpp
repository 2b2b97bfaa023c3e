#include "golden/cli/app.hpp"
#include "golden/cli/presets.hpp"
#include "golden/cli/verify.hpp"
#include "golden/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace golden;
using namespace golden::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("golden_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const char* kQuadranacci = "[quadranacci]\ncoeffs = 1,1,1,1\nseeds = 0,1,1,2\ndescription = four-term sum\n";

}  // namespace

TEST_CASE("seq") {
    auto r = run_cli({"seq", "--preset", "fibonacci", "--count", "6", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1,1,2,3,5\n");

    r = run_cli({"seq", "--coeffs", "1,1", "--seeds", "0,1", "--count", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    r = run_cli({"seq", "--preset", "tribonacci", "--count", "11"});
    CHECK(r.out == "0 1 1 2 4 7 13 24 44 81 149\n");

    // seeds default to the unit vector
    r = run_cli({"seq", "--coeffs", "1,1", "--count", "5"});
    CHECK(r.out == "0 1 1 2 3\n");

    // --seeds overrides a preset's seeds
    r = run_cli({"seq", "--preset", "fibonacci", "--seeds", "2,1", "--count", "6"});
    CHECK(r.out == "2 1 3 4 7 11\n");

    r = run_cli({"seq", "--coeffs", "1/2,1/3", "--seeds", "1,1", "--count", "4"});
    CHECK(r.out == "1 1 5/6 7/9\n");
}

TEST_CASE("term") {
    auto r = run_cli({"term", "--preset", "fibonacci", "--k", "50"});
    CHECK(r.code == 0);
    CHECK(r.out == "12586269025\n");
    r = run_cli({"term", "--preset", "pell", "--k", "3", "--format", "csv"});
    CHECK(r.out == "3,5\n");
    CHECK(run_cli({"term", "--preset", "fibonacci"}).code == 2);
    CHECK(run_cli({"term", "--preset", "fibonacci", "--k", "-1"}).code == 2);
}

TEST_CASE("trapezoid") {
    auto r = run_cli({"trapezoid", "--preset", "pell", "--rows", "4", "--format", "text"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows.back() == "0 8 12 6 1");

    r = run_cli({"trapezoid", "--preset", "lucas", "--rows", "6", "--format", "csv"});
    CHECK(lines(r.out).back() == "2,9,15,10,0,-3,-1");

    r = run_cli({"trapezoid", "--preset", "tribonacci", "--rows", "6", "--method", "closed"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "0 1 5 15 30 45 51 45 30 15 5 1 0");

    r = run_cli({"trapezoid", "--coeffs", "5,-3,2", "--seeds", "1,-2,7/3", "--rows", "7", "--method", "closed"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == run_cli({"trapezoid", "--coeffs", "5,-3,2", "--seeds", "1,-2,7/3", "--rows", "7"}).out);

    CHECK(run_cli({"trapezoid", "--preset", "pell", "--method", "sideways"}).code == 2);
    CHECK(run_cli({"trapezoid", "--coeffs", "1,1,1,1", "--method", "closed"}).code == 2);
}

TEST_CASE("genfunc, roots, binet, rowsum, converge") {
    CHECK(run_cli({"genfunc", "--preset", "fibonacci"}).out == "z/(1 - z - z^2)\n");
    CHECK(run_cli({"genfunc", "--preset", "fibonacci", "--unicode"}).out == "z/(1 − z − z²)\n");
    CHECK(run_cli({"genfunc", "--preset", "lucas", "--format", "csv"}).out == "2,-1\n1,-1,-1\n");

    auto r = run_cli({"roots", "--preset", "fibonacci", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.6180339887498948", 0) == 0);
    r = run_cli({"roots", "--preset", "pell", "--precision", "extended"});
    CHECK(r.out.find("2.41421356237309504880168872420969") != std::string::npos);

    r = run_cli({"binet", "--preset", "lucas", "--k", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rounded 123") != std::string::npos);
    CHECK(r.out.find("(vanishes)") != std::string::npos);
    // 1 is a root here, so the weight system is singular
    CHECK(run_cli({"binet", "--coeffs", "0,1", "--seeds", "1,1"}).code == 2);
    CHECK(run_cli({"binet", "--coeffs", "-1,2", "--seeds", "0,1"}).code == 2);

    r = run_cli({"rowsum", "--preset", "fibonacci", "--rows", "4"});
    CHECK(r.out == "0 1 1\n1 2 2\n2 4 4\n3 8 8\n");

    r = run_cli({"converge", "--preset", "pell"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\nconverged by k = 60") != std::string::npos);
    r = run_cli({"converge", "--coeffs=-1,0", "--seeds", "0,1"});
    CHECK(r.out.find("tied dominance") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with usage text on the error stream") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"seq", "--preset", "fibonacci", "--bogus"},
             {"seq", "--preset", "fibonacci", "--format", "xml"},
             {"seq", "--preset", "fibonacci", "--coeffs", "1,1"},
             {"seq"},
             {"seq", "--preset", "nope"},
         }) {
        const auto r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("Usage") != std::string::npos);
    }
    // malformed numbers and seed counts are input errors too
    CHECK(run_cli({"seq", "--coeffs", "1.5,1"}).code == 2);
    CHECK(run_cli({"seq", "--coeffs", "1,1", "--seeds", "0,1,2"}).code == 2);
    CHECK(run_cli({"seq", "--coeffs", "1,1/0"}).code == 2);

    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("trapezoid") != std::string::npos);
}

TEST_CASE("load_presets") {
    CHECK(load_presets(std::nullopt).all().size() == 4);
    const auto builtins = load_presets(std::nullopt);
    const auto* pell = builtins.find("pell");
    REQUIRE(pell);
    CHECK(pell->coeffs == std::vector<Rational>{Rational(1), Rational(2)});

    const auto path = write_temp("quad.ini", kQuadranacci);
    const auto store = load_presets(path);
    CHECK(store.all().size() == 5);
    REQUIRE(store.find("quadranacci"));
    CHECK(store.find("quadranacci")->description == "four-term sum");
    CHECK(run_cli({"seq", "--preset", "quadranacci", "--presets-file", path, "--count", "8"}).out ==
          "0 1 1 2 4 8 15 29\n");

    const auto shadow = write_temp("shadow.ini", "[fibonacci]\ncoeffs = 1,1\nseeds = 1,1\n");
    CHECK_THROWS_AS(load_presets(shadow), InvalidSpec);
    const auto r = run_cli({"presets", "--presets-file", shadow});
    CHECK(r.code == 2);
    CHECK(r.err.find("fibonacci") != std::string::npos);

    CHECK(run_cli({"presets", "--presets-file", "/nonexistent/presets.ini"}).code == 2);
}

TEST_CASE("parse_presets reports line and column") {
    const auto expect_error = [](const std::string& text, std::size_t line, std::size_t column) {
        try {
            (void)parse_presets(text);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    expect_error("coeffs = 1,1\n", 1, 1);
    expect_error("[a]\ncoeffs = 1,x\nseeds = 0,1\n", 2, 10);
    expect_error("[a]\n  seeds   1,1\n", 2, 3);
    expect_error("[a]\ncoeffs = 1,1\nseeds = 0,1\ncolour = red\n", 4, 1);
    expect_error("[a\n", 1, 3);
    expect_error("[a]\ncoeffs = 1,1\n", 1, 1);
    expect_error("[a]\ncoeffs = 1,1\nseeds = 0\n", 1, 1);
    expect_error("[a]\ncoeffs = 1,1\nseeds = 0,1\n[a]\ncoeffs = 1\nseeds = 1\n", 4, 2);

    const auto ok = parse_presets("# comment\n\n[x]\n coeffs = 1/2 , -3 \nseeds=1,1\n");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].coeffs == std::vector<Rational>{Rational(1, 2), Rational(-3)});

    const auto path = write_temp("bad.ini", "[a]\ncoeffs = 1,1\nseeds = 0,q\n");
    const auto r = run_cli({"seq", "--preset", "fibonacci", "--presets-file", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3, column 9") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run_cli({"verify", "--preset", "fibonacci"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fail") == std::string::npos);

    const auto fib = verify_all(make_spec({1, 1}), SeedVector{{0, 1}});
    CHECK(all_passed(fib));
    for (const auto& rep : fib) CHECK_MESSAGE(rep.status == CheckStatus::pass, rep.check << ": " << rep.note);

    const auto trib = verify_all(make_spec({1, 1, 1}), SeedVector{{0, 1, 1}});
    for (const auto& rep : trib) {
        if (rep.check == "binet_cubic_closed_matches") {
            CHECK(rep.status == CheckStatus::fail);
            CHECK(rep.note.find("formula mismatch") != std::string::npos);
        } else {
            CHECK_MESSAGE(rep.status == CheckStatus::pass, rep.check << ": " << rep.note);
        }
    }
    CHECK(run_cli({"verify", "--preset", "tribonacci"}).code == 1);

    const auto degenerate = verify_all(make_spec({0, 1}), SeedVector{{0, 1}});
    bool saw_skip = false;
    for (const auto& rep : degenerate) {
        if (rep.check == "inverse_identity") saw_skip = rep.status == CheckStatus::skipped;
        CHECK(rep.status != CheckStatus::fail);
    }
    CHECK(saw_skip);

    const auto imag = verify_all(make_spec({-1, 0}), SeedVector{{0, 1}});
    for (const auto& rep : imag)
        if (rep.check == "ratio_convergence") CHECK(rep.status == CheckStatus::skipped);

    const auto quartic = verify_all(make_spec({1, 1, 1, 1}), SeedVector{{0, 1, 1, 2}});
    CHECK(all_passed(quartic));

    VerifyOptions extended;
    extended.precision = Precision::extended;
    CHECK(all_passed(verify_all(make_spec({1, 2}), SeedVector{{0, 1}}, extended)));
}

TEST_CASE("output is deterministic and JSON round-trips") {
    const auto path = write_temp("round.ini", kQuadranacci);
    const std::vector<std::vector<std::string>> commands = {
        {"seq", "--preset", "fibonacci", "--count", "60"},
        {"term", "--preset", "pell", "--k", "200"},
        {"roots", "--preset", "tribonacci"},
        {"roots", "--preset", "quadranacci", "--presets-file", path, "--precision", "extended"},
        {"binet", "--preset", "pell", "--k", "30"},
        {"genfunc", "--preset", "tribonacci"},
        {"trapezoid", "--preset", "lucas", "--rows", "6"},
        {"rowsum", "--preset", "pell", "--rows", "6"},
        {"converge", "--preset", "tribonacci"},
        {"verify", "--preset", "tribonacci"},
        {"presets", "--presets-file", path},
    };
    for (auto args : commands) {
        for (const char* format : {"text", "csv", "json"}) {
            auto with = args;
            with.push_back("--format");
            with.push_back(format);
            const auto a = run_cli(with);
            const auto b = run_cli(with);
            CHECK(a.out == b.out);
            CHECK(a.code == b.code);
            if (std::string(format) == "json") {
                const auto parsed = nlohmann::ordered_json::parse(a.out);
                CHECK(nlohmann::ordered_json::parse(parsed.dump()) == parsed);
                CHECK(parsed.dump(2) + "\n" == a.out);
            }
        }
    }

    const auto seq = nlohmann::json::parse(run_cli({"seq", "--preset", "fibonacci", "--count", "60", "--format", "json"}).out);
    CHECK(seq["coeffs"] == nlohmann::json::array({"1", "1"}));
    CHECK(seq["terms"][50] == "12586269025");
    CHECK(seq["terms"][59] == "956722026041");

    const auto trap = nlohmann::json::parse(run_cli({"trapezoid", "--preset", "fibonacci", "--rows", "2", "--format", "json"}).out);
    CHECK(trap["rows"] == nlohmann::json::parse(R"([["0","1"],["0","1","1"]])"));

    const auto ver = nlohmann::json::parse(run_cli({"verify", "--preset", "fibonacci", "--format", "json"}).out);
    REQUIRE(ver.is_array());
    for (const auto& entry : ver) {
        CHECK(entry.contains("check"));
        CHECK(entry.contains("status"));
        CHECK(entry.contains("residual"));
        CHECK(entry["inputs"]["seeds"] == nlohmann::json::array({"0", "1"}));
    }
}
