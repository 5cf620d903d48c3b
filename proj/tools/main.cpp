// bcn: command-line front end.  Every command is deterministic given the
// configuration and --seed.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bcn/checks.hpp"
#include "bcn/config.hpp"
#include "bcn/irrep_dims.hpp"

using namespace bcn;

namespace {

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<std::string> variant;
};

Config load(const Options& o) {
    if (o.config_path.empty()) throw ConfigError("--config is required");
    return load_config(o.config_path);
}

std::uint64_t seed_of(const Options& o, const Config& c) { return o.seed ? *o.seed : c.seed; }
int samples_of(const Options& o, const Config& c) { return o.samples ? *o.samples : c.samples; }

GroupSpec spec_of(const Options& o, const Config& c) {
    std::optional<Variant> v;
    if (o.variant) v = parse_variant(*o.variant);
    return build_spec(c, v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string basis_list(const Tower& T, const std::vector<Elem>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + T.to_string(xs[i]);
    return s + "]";
}

int print_report(const CheckReport& r) {
    std::cout << "suite = " << r.suite << "\nchecks = " << r.checks << "\nfailures = " << r.failures << "\n";
    for (const auto& c : r.counterexamples) std::cout << "counterexample: " << c << "\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    std::cout << "status = " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return r.ok() ? 0 : 1;
}

int cmd_validate(const Options& o) {
    Config c = load(o);
    TowerPtr T = build_tower(c);
    BCData d = build_data(c, T);
    ValidationReport rep = validate(d);
    std::cout << "rank = " << d.rank << "\n[K:k] = " << d.K.degree() << "\n";
    if (!d.V2.is_zero() || !d.Vp.is_zero()) {
        Subfield K0 = compute_K0(d);
        std::cout << "[K0:k] = " << K0.degree() << "\n[K:K0] = " << d.K.degree() / K0.degree() << "\n";
        std::cout << "K0_basis = " << basis_list(*T, K0.basis()) << "\n";
        if (K0 == d.K) std::cout << "K0 = K\n";
    }
    for (const auto& v : rep.violations) std::cout << "violation " << v.id << ": " << v.name << "\n";
    if (rep.ok()) {
        try {
            DerivedData dd = derive(d);
            std::cout << "[E:k] = " << dd.E.degree() << "\nV_basis = " << basis_list(*T, dd.V.basis()) << "\n";
            std::cout << "1 in V' = " << dd.one_in_Vp << "\n1 in V = " << dd.one_in_V << "\n";
            if (d.Vpp) std::cout << "1 in V'' = " << dd.one_in_Vpp << "\n";
        } catch (const TowerTooSmall& e) {
            std::cout << "tower too small: " << e.what() << "\n";
            return 1;
        }
    }
    std::cout << "status = " << (rep.ok() ? "valid" : "invalid") << "\n";
    return rep.ok() ? 0 : 1;
}

void print_membership(const GroupSpec& S, const QMatrix& g) {
    const Tower& T = S.tower();
    std::cout << "matrix =\n" << g.to_string(T) << "\n";
    Membership m = membership(S, g);
    if (m.normal_form) std::cout << m.normal_form->to_string(T) << "\n";
    std::cout << "membership = " << verdict_name(m.verdict) << "\n";
    if (!m.reason.empty()) std::cout << "reason = " << m.reason << "\n";
}

int cmd_normal_form(const Options& o, const std::string& word_file) {
    Config c = load(o);
    GroupSpec S = spec_of(o, c);
    GroupWord w = parse_word(S.tower(), S.rank(), read_file(word_file));
    QMatrix g = evaluate_checked(S, w);
    print_membership(S, g);
    return 0;
}

int cmd_mul(const Options& o, const std::string& left, const std::string& right) {
    Config c = load(o);
    GroupSpec S = spec_of(o, c);
    QMatrix a = evaluate_checked(S, parse_word(S.tower(), S.rank(), read_file(left)));
    QMatrix b = evaluate_checked(S, parse_word(S.tower(), S.rank(), read_file(right)));
    print_membership(S, a * b);
    return 0;
}

int cmd_check(const Options& o, const std::string& suite) {
    Config c = load(o);
    Rng rng(seed_of(o, c));
    int samples = samples_of(o, c);
    if (suite == "pinning") {
        TowerPtr T = build_tower(c);
        PinningReport p = verify_pinning_relations(T, c.rank, samples, rng);
        std::cout << "suite = pinning\nchecks = " << p.checks << "\nfailures = " << p.failures.size() << "\n";
        for (std::size_t i = 0; i < p.failures.size() && i < 5; ++i)
            std::cout << "counterexample: " << p.failures[i].relation << ": " << p.failures[i].detail << "\n";
        std::cout << "status = " << (p.ok() ? "PASS" : "FAIL") << "\n";
        return p.ok() ? 0 : 1;
    }
    GroupSpec S = spec_of(o, c);
    if (suite == "mu") return print_report(check_mu_injectivity(S, samples, rng));
    if (suite == "bn") return print_report(check_bn_axioms(S, samples, rng));
    if (suite == "roundtrip") return print_report(check_round_trip(S, samples, 15, rng));
    if (suite == "stability") return print_report(check_constraint_stability(S, samples, rng));
    if (suite == "perfectness") return print_report(check_perfectness_witnesses(S, samples, rng));
    if (suite == "conj") return print_report(check_conjugation(S, samples, rng));
    if (suite == "levi") {
        try {
            return print_report(check_levi_containment(S, samples, rng));
        } catch (const PreconditionNotNormalized& e) {
            // move a basis vector of V' to 1 and retry
            const Elem v = S.data.Vp.basis().front();
            std::cout << "note: " << e.what() << "; normalizing by v = " << S.tower().to_string(v) << "\n";
            GroupSpec N = make_group_spec(normalize_data(S.data, v), S.variant, S.v1, S.v2, S.cartan_search_bound);
            return print_report(check_levi_containment(N, samples, rng));
        }
    }
    throw ConfigError("unknown suite '" + suite + "'");
}

int cmd_dims(const Options& o, const std::string& weight, std::optional<std::uint64_t> lm) {
    Config c = load(o);
    GroupSpec S = spec_of(o, c);
    DominantWeight lambda = parse_weight(weight);
    DimResult r = dim_LG(S, lambda, lm);
    std::cout << "variant = " << variant_name(S.variant) << "\n" << format_dim_result(S.tower(), lambda, r);
    return 0;
}

int cmd_demo_data(const std::string& which, const std::string& out) {
    Config c;
    if (which == "rank1") c = demo_rank1();
    else if (which == "rank2") c = demo_rank2();
    else throw ConfigError("unknown demo '" + which + "' (expected rank1 or rank2)");
    if (out.empty()) {
        std::cout << dump_config(c);
    } else {
        std::ofstream f(out);
        if (!f) throw ConfigError("cannot write " + out);
        f << dump_config(c);
    }
    return 0;
}

int cmd_appendix(const Options& o) {
    Config c = load(o);
    Rng rng(seed_of(o, c));
    if (c.rank != 1) std::cout << "note: the identity lives in rank 1; using the tower only\n";
    AppendixReport r = check_appendix_identity(build_tower(c), samples_of(o, c), rng);
    std::cout << "instances = " << r.instances << "\nliteral_failures = " << r.literal_failures << "\n";
    std::cout << "literal_holds = " << r.literal_holds << "\ncorrected_holds = " << r.corrected_holds << "\n";
    std::cout << "degenerate_diagonal = " << r.degenerate_diagonal << "\n";
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
    bool ok = r.literal_holds && r.degenerate_diagonal;
    std::cout << "status = " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-split groups of type BC_n in characteristic 2: exact matrix computations"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config_path, "JSON configuration file");
    app.add_option("--seed", o.seed, "random seed (overrides the config)");
    app.add_option("--samples", o.samples, "samples per property (overrides the config)");
    app.add_option("--variant", o.variant, "standard, derived or rank2 (overrides the config)")
        ->check(CLI::IsMember({"standard", "derived", "rank2"}));

    auto* validate_cmd = app.add_subcommand("validate", "check the defining conditions of the data");

    std::string word_file, left_file, right_file;
    auto* nf_cmd = app.add_subcommand("normal-form", "Bruhat normal form of a word");
    nf_cmd->add_option("word", word_file, "JSON word file")->required();

    auto* mul_cmd = app.add_subcommand("mul", "multiply two words and print the normal form");
    mul_cmd->add_option("left", left_file, "JSON word file")->required();
    mul_cmd->add_option("right", right_file, "JSON word file")->required();

    std::string suite;
    auto* check_cmd = app.add_subcommand("check", "run a randomized property suite");
    check_cmd->add_option("suite", suite, "property suite")
        ->required()
        ->check(CLI::IsMember({"pinning", "mu", "bn", "levi", "conj", "roundtrip", "stability", "perfectness"}));

    std::string weight;
    std::optional<std::uint64_t> lm;
    auto* dims_cmd = app.add_subcommand("dims", "dimension of the irreducible module L_G(lambda)");
    dims_cmd->add_option("lambda", weight, "weight as comma-separated integers, e.g. 1,0")->required();
    dims_cmd->add_option("--lm", lm, "dim L_M(lambda) when no formula is available (n >= 3)");

    std::string which = "rank1", out;
    auto* demo_cmd = app.add_subcommand("demo-data", "write one of the two worked configurations");
    demo_cmd->add_option("which", which, "rank1 or rank2")->check(CLI::IsMember({"rank1", "rank2"}));
    demo_cmd->add_option("-o,--out", out, "output file (default stdout)");

    auto* appendix_cmd = app.add_subcommand("appendix", "check the rank-1 factorization of s b s");

    app.fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) return cmd_validate(o);
        if (*nf_cmd) return cmd_normal_form(o, word_file);
        if (*mul_cmd) return cmd_mul(o, left_file, right_file);
        if (*check_cmd) return cmd_check(o, suite);
        if (*dims_cmd) return cmd_dims(o, weight, lm);
        if (*demo_cmd) return cmd_demo_data(which, out);
        if (*appendix_cmd) return cmd_appendix(o);
    } catch (const InvalidData& e) {
        std::cerr << "invalid data: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
