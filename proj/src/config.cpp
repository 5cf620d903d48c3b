#include "bcn/config.hpp"

#include <fstream>
#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bcn {

using json = nlohmann::ordered_json;

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
    return j.contains(key) ? field<T>(j, key) : fallback;
}

SpaceConfig space(const json& j, const char* key, const std::string& default_over) {
    if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
    const json& s = j.at(key);
    if (s.is_array()) return {default_over, field<std::vector<std::string>>(json{{"basis", s}}, "basis")};
    if (!s.is_object()) throw ConfigError(std::string("field '") + key + "' must be an object or an array");
    return {field_or<std::string>(s, "over", default_over), field<std::vector<std::string>>(s, "basis")};
}

json space_json(const SpaceConfig& s) { return json{{"over", s.over}, {"basis", s.basis}}; }

std::vector<Elem> parse_all(const Tower& T, const std::vector<std::string>& xs, const char* what) {
    std::vector<Elem> out;
    for (const auto& s : xs) {
        try {
            out.push_back(T.parse(s));
        } catch (const ParseError& e) {
            throw ConfigError(std::string(what) + ": " + e.what());
        }
    }
    return out;
}

Scalars scalars_of(const std::string& s, const char* what) {
    try {
        return parse_scalars(s);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Config parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("the configuration must be a JSON object");
    Config c;
    c.variables = field<std::vector<std::string>>(j, "variables");
    if (!j.contains("roots") || !j.at("roots").is_object()) throw ConfigError("missing object 'roots'");
    for (const auto& v : c.variables) c.root_exponents.push_back(field_or<int>(j.at("roots"), v.c_str(), 0));
    for (const auto& [name, e] : j.at("roots").items())
        if (std::find(c.variables.begin(), c.variables.end(), name) == c.variables.end())
            throw ConfigError("roots: unknown variable '" + name + "'");
    c.rank = field<int>(j, "rank");
    c.K = field<std::vector<std::string>>(j, "K");
    c.V2 = space(j, "V2", "K2");
    c.Vp = space(j, "Vp", "kK2");
    if (j.contains("Vpp") && !j.at("Vpp").is_null()) c.Vpp = space(j, "Vpp", "K0");
    c.variant = field_or<std::string>(j, "variant", "standard");
    if (j.contains("v1")) c.v1 = field<std::string>(j, "v1");
    if (j.contains("v2")) c.v2 = field<std::string>(j, "v2");
    c.seed = field_or<std::uint64_t>(j, "seed", 1);
    c.samples = field_or<int>(j, "samples", 50);
    c.cartan_search_bound = field_or<int>(j, "cartan_search_bound", 6);
    try {
        parse_variant(c.variant);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("variant: ") + e.what());
    }
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const Config& c) {
    json j;
    j["variables"] = c.variables;
    json roots = json::object();
    for (std::size_t i = 0; i < c.variables.size(); ++i) roots[c.variables[i]] = c.root_exponents[i];
    j["roots"] = roots;
    j["rank"] = c.rank;
    j["K"] = c.K;
    j["V2"] = space_json(c.V2);
    j["Vp"] = space_json(c.Vp);
    if (c.Vpp) j["Vpp"] = space_json(*c.Vpp);
    j["variant"] = c.variant;
    if (c.v1) j["v1"] = *c.v1;
    if (c.v2) j["v2"] = *c.v2;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["cartan_search_bound"] = c.cartan_search_bound;
    return j.dump(2) + "\n";
}

TowerPtr build_tower(const Config& c) {
    try {
        return make_tower(c.variables, c.root_exponents);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("tower: ") + e.what());
    }
}

BCData build_data(const Config& c, const TowerPtr& T) {
    std::optional<std::vector<Elem>> vpp;
    if (c.Vpp) vpp = parse_all(*T, c.Vpp->basis, "Vpp");
    return make_bc_data(T, c.rank, parse_all(*T, c.K, "K"), parse_all(*T, c.V2.basis, "V2"),
                        parse_all(*T, c.Vp.basis, "Vp"), scalars_of(c.V2.over, "V2"), scalars_of(c.Vp.over, "Vp"),
                        vpp, c.Vpp ? scalars_of(c.Vpp->over, "Vpp") : Scalars::K0);
}

GroupSpec build_spec(const Config& c, std::optional<Variant> variant_override) {
    TowerPtr T = build_tower(c);
    BCData d = build_data(c, T);
    Variant v = variant_override ? *variant_override : parse_variant(c.variant);
    std::optional<Elem> v1, v2;
    if (c.v1) v1 = parse_all(*T, {*c.v1}, "v1").front();
    if (c.v2) v2 = parse_all(*T, {*c.v2}, "v2").front();
    return make_group_spec(std::move(d), v, v1, v2, c.cartan_search_bound);
}

Config demo_rank1() {
    Config c;
    c.variables = {"t"};
    c.root_exponents = {2};  // t^(1/4) is needed for E
    c.rank = 1;
    c.K = {"t^(1/2)"};
    c.V2 = {"K2", {"t^(1/2)"}};
    c.Vp = {"kK2", {"1"}};
    c.samples = 100;
    return c;
}

Config demo_rank2() {
    Config c;
    c.variables = {"t", "u", "v"};
    c.root_exponents = {2, 1, 1};
    c.rank = 2;
    c.K = {"t^(1/2)", "u^(1/2)", "v^(1/2)"};
    c.V2 = {"K2", {"t^(1/2)"}};
    c.Vp = {"kK2", {"1"}};
    c.Vpp = SpaceConfig{"K0", {"1", "u^(1/2)", "v^(1/2)"}};
    c.variant = "rank2";
    c.samples = 50;
    return c;
}

GroupWord parse_word(const Tower& T, int rank, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("word is not valid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("word")) j = j.at("word");
    if (!j.is_array()) throw ConfigError("a word must be a JSON array of atoms");
    GroupWord w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& a = j[i];
        std::string where = "atom " + std::to_string(i);
        try {
            if (a.contains("root")) {
                Root r{a.at("root").get<std::vector<int>>()};
                if (r.rank() != rank || !is_root(r)) throw ConfigError(where + ": not a root of BC_" + std::to_string(rank));
                w.push_back(Atom::root_elem(r, T.parse(a.at("c").get<std::string>())));
            } else if (a.contains("cartan")) {
                int idx = a.at("cartan").get<int>();
                if (idx < 1 || idx > rank) throw ConfigError(where + ": Cartan index out of range");
                w.push_back(Atom::cartan(idx, T.parse(a.at("c").get<std::string>())));
            } else if (a.contains("s")) {
                int idx = a.at("s").get<int>();
                if (idx < 1 || idx > rank) throw ConfigError(where + ": reflection index out of range");
                w.push_back(Atom::reflection(idx, a.value("inverse", false)));
            } else {
                throw ConfigError(where + ": expected one of the keys root, cartan, s");
            }
        } catch (const json::exception& e) {
            throw ConfigError(where + ": " + e.what());
        } catch (const ParseError& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    return w;
}

std::string dump_word(const Tower& T, const GroupWord& w) {
    json j = json::array();
    for (const Atom& a : w) {
        switch (a.kind) {
            case Atom::Kind::Root: j.push_back({{"root", a.root.c}, {"c", T.to_string(a.coeff)}}); break;
            case Atom::Kind::Cartan: j.push_back({{"cartan", a.index}, {"c", T.to_string(a.coeff)}}); break;
            case Atom::Kind::Reflection: j.push_back({{"s", a.index}, {"inverse", a.inverse}}); break;
        }
    }
    return j.dump();
}

QMatrix evaluate_checked(const GroupSpec& spec, const GroupWord& w) {
    QMatrix g = QMatrix::identity_q(spec.rank());
    for (std::size_t i = 0; i < w.size(); ++i) {
        try {
            g = g * atom_matrix(spec, w[i]);
        } catch (const ConstraintViolation& e) {
            throw ConstraintViolation("atom " + std::to_string(i) + ": " + e.what());
        }
    }
    return g;
}

}  // namespace bcn
