// JSON configuration: tower, defining data, variant and sampling knobs,
// plus the word format used by the normal-form and mul commands.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcn/group.hpp"

namespace bcn {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpaceConfig {
    std::string over;                // k, K2, kK2, K0 or K
    std::vector<std::string> basis;  // elements in tower syntax, e.g. "t^(1/2)*u"

    friend bool operator==(const SpaceConfig&, const SpaceConfig&) = default;
};

struct Config {
    std::vector<std::string> variables;
    std::vector<int> root_exponents;  // adjoin the 2^e-th root of each variable
    int rank = 1;
    std::vector<std::string> K;       // generators of K over k
    SpaceConfig V2{"K2", {}};
    SpaceConfig Vp{"kK2", {}};
    std::optional<SpaceConfig> Vpp;
    std::string variant = "standard";
    std::optional<std::string> v1;
    std::optional<std::string> v2;
    std::uint64_t seed = 1;
    int samples = 50;
    int cartan_search_bound = 6;

    friend bool operator==(const Config&, const Config&) = default;
};

/// Throws ConfigError naming the offending field.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);
/// Canonical JSON; parse_config(dump_config(c)) == c.
std::string dump_config(const Config& c);

TowerPtr build_tower(const Config& c);
/// Parses every element; subspaces are built over their declared fields.
BCData build_data(const Config& c, const TowerPtr& tower);
/// build_data + make_group_spec; the variant override wins over c.variant.
GroupSpec build_spec(const Config& c, std::optional<Variant> variant_override = std::nullopt);

/// k = F2(t), K = k(t^(1/2)), V2 = k t^(1/2), V' = k, n = 1.
Config demo_rank1();
/// k = F2(t,u,v), K = k(sqrt t, sqrt u, sqrt v), V2 = k sqrt t, V' = k,
/// V'' = K0 + K0 sqrt u + K0 sqrt v, n = 2, rank-2 variant.
Config demo_rank2();

/// A word is a JSON array of atoms:
///   {"root": [1,-1], "c": "t^(1/2)"}   root element, root in eps coordinates
///   {"cartan": 1, "c": "t"}            h_(a_1)(t), or h_(2a_n) for index n
///   {"s": 2, "inverse": false}         simple representative
/// The text may also be an object {"word": [...]}.
GroupWord parse_word(const Tower& T, int rank, const std::string& json_text);
/// Inverse of parse_word.
std::string dump_word(const Tower& T, const GroupWord& w);

/// Evaluates atom by atom; rethrows ConstraintViolation with the atom index.
QMatrix evaluate_checked(const GroupSpec& spec, const GroupWord& w);

}  // namespace bcn
