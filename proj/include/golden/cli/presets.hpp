#pragma once

#include "golden/rational.hpp"
#include "golden/recurrence.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace golden::cli {

struct Preset {
    std::string name;
    std::vector<Rational> coeffs;  // alpha_0 first
    std::vector<Rational> seeds;
    std::string description;

    RecurrenceSpec spec() const { return make_spec(coeffs); }
    SeedVector seed_vector() const { return SeedVector{seeds}; }
};

/// Named presets in insertion order; built-ins always come first.
class PresetStore {
public:
    const std::vector<Preset>& all() const { return presets_; }
    const Preset* find(std::string_view name) const;
    bool builtin(std::string_view name) const;

    /// Throws InvalidSpec if the name is taken.
    void add(Preset preset);

private:
    std::vector<Preset> presets_;
};

std::vector<Preset> builtin_presets();

/// Parses the sectioned key/value preset format. Errors carry 1-based line and column.
std::vector<Preset> parse_presets(std::string_view text);

/// Built-ins merged with the entries of `path`. User entries may not reuse a built-in name.
PresetStore load_presets(const std::optional<std::string>& path);

}  // namespace golden::cli
