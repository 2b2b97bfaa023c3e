#include "golden/cli/presets.hpp"

#include "golden/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace golden::cli {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trim in place and report how many leading characters were dropped.
std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    if (leading) *leading = b;
    return s.substr(b, e - b);
}

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

struct Pending {
    Preset preset;
    std::size_t line = 0;
    bool has_coeffs = false;
    bool has_seeds = false;
};

void finish(std::optional<Pending>& pending, std::vector<Preset>& out) {
    if (!pending) return;
    const auto& p = *pending;
    if (!p.has_coeffs) throw ParseError("preset '" + p.preset.name + "' has no coeffs", p.line, 1);
    if (!p.has_seeds) throw ParseError("preset '" + p.preset.name + "' has no seeds", p.line, 1);
    if (p.preset.coeffs.size() != p.preset.seeds.size())
        throw ParseError("preset '" + p.preset.name + "' needs as many seeds as coeffs", p.line, 1);
    try {
        (void)make_spec(p.preset.coeffs);
    } catch (const Error& e) {
        throw ParseError("preset '" + p.preset.name + "': " + e.what(), p.line, 1);
    }
    out.push_back(p.preset);
    pending.reset();
}

}  // namespace

const Preset* PresetStore::find(std::string_view name) const {
    const auto it = std::find_if(presets_.begin(), presets_.end(), [&](const Preset& p) { return p.name == name; });
    return it == presets_.end() ? nullptr : &*it;
}

bool PresetStore::builtin(std::string_view name) const {
    const auto b = builtin_presets();
    return std::any_of(b.begin(), b.end(), [&](const Preset& p) { return p.name == name; });
}

void PresetStore::add(Preset preset) {
    if (find(preset.name)) throw InvalidSpec("preset '" + preset.name + "' is already defined");
    presets_.push_back(std::move(preset));
}

std::vector<Preset> builtin_presets() {
    const auto r = [](std::initializer_list<long> v) {
        std::vector<Rational> out;
        for (long x : v) out.emplace_back(x);
        return out;
    };
    return {
        {"fibonacci", r({1, 1}), r({0, 1}), "x_{k+2} = x_{k+1} + x_k"},
        {"lucas", r({1, 1}), r({2, 1}), "Fibonacci recurrence seeded with 2, 1"},
        {"pell", r({1, 2}), r({0, 1}), "x_{k+2} = 2 x_{k+1} + x_k"},
        {"tribonacci", r({1, 1, 1}), r({0, 1, 1}), "x_{k+3} = x_{k+2} + x_{k+1} + x_k"},
    };
}

std::vector<Preset> parse_presets(std::string_view text) {
    std::vector<Preset> out;
    std::optional<Pending> pending;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::size_t lead = 0;
        const std::string_view line = trim(raw, &lead);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no, lead + line.size() + 1);
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!valid_name(name)) throw ParseError("invalid preset name", line_no, lead + 2);
            finish(pending, out);
            const bool dup = std::any_of(out.begin(), out.end(), [&](const Preset& p) { return p.name == name; });
            if (dup) throw ParseError("duplicate preset '" + std::string(name) + "'", line_no, lead + 2);
            pending = Pending{Preset{std::string(name), {}, {}, {}}, line_no};
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, lead + 1);
        if (!pending) throw ParseError("key outside of a [preset] section", line_no, lead + 1);
        const std::string_view key = trim(line.substr(0, eq));
        std::size_t value_lead = 0;
        const std::string_view value = trim(line.substr(eq + 1), &value_lead);
        const std::size_t value_column = lead + eq + 1 + value_lead + 1;

        if (key == "description") {
            pending->preset.description = std::string(value);
        } else if (key == "coeffs" || key == "seeds") {
            std::vector<Rational> parsed;
            try {
                parsed = parse_rational_list(value);
            } catch (const Error& e) {
                throw ParseError(std::string(key) + ": " + e.what(), line_no, value_column);
            }
            if (key == "coeffs") {
                pending->preset.coeffs = std::move(parsed);
                pending->has_coeffs = true;
            } else {
                pending->preset.seeds = std::move(parsed);
                pending->has_seeds = true;
            }
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", line_no, lead + 1);
        }
    }
    finish(pending, out);
    return out;
}

PresetStore load_presets(const std::optional<std::string>& path) {
    PresetStore store;
    for (auto& p : builtin_presets()) store.add(std::move(p));
    if (!path) return store;

    std::ifstream in(*path, std::ios::binary);
    if (!in) throw InvalidSpec("cannot open presets file '" + *path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    for (auto& p : parse_presets(buffer.str())) {
        if (store.builtin(p.name)) throw InvalidSpec("presets file may not redefine built-in '" + p.name + "'");
        store.add(std::move(p));
    }
    return store;
}

}  // namespace golden::cli
