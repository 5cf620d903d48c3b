// The groups G(k) as matrices: generators, words, Bruhat normal form
// u_w s_w h u and the membership decision.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcn/chevalley.hpp"
#include "bcn/group_data.hpp"
#include "bcn/roots.hpp"

namespace bcn {

enum class Variant { Standard, Derived, Rank2 };
Variant parse_variant(const std::string& s);
std::string variant_name(Variant v);

struct InvalidData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConstraintViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInGroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Tri { Yes, No, Unknown };

struct GroupSpec {
    BCData data;
    DerivedData derived;
    Variant variant = Variant::Standard;
    /// Representatives s_(a_1)(v1) (rank-2 variant) and s_(2a_n)(v2)
    /// (derived and rank-2 variants); both 1 in the standard variant.
    Elem v1 = Elem::one();
    Elem v2 = Elem::one();
    int cartan_search_bound = 6;

    int rank() const { return data.rank; }
    const Tower& tower() const { return *data.tower; }

    /// Coefficient domain of the root group of a (any sign).
    bool in_root_domain(const Root& a, const Elem& c) const;
    /// Nonzero element of the root domain of a.
    Elem random_root_coeff(const Root& a, Rng& rng) const;
    /// Element outside the root domain but inside E' (for negative tests).
    Elem random_outside_root_domain(const Root& a, Rng& rng) const;

    /// Membership of torus(c) in the Cartan subgroup; Unknown only for the
    /// ratio-generated factors when the bounded search fails.
    Tri cartan_member(const std::vector<Elem>& c) const;
    /// Random element of the Cartan subgroup as an atom coefficient for
    /// h_(a_i) (i < n) or h_(2 a_n) (i = n).
    Elem random_cartan_coeff(int i, Rng& rng) const;
    bool cartan_atom_ok(int i, const Elem& c) const;
};

/// Validates the data and the representative choices; throws InvalidData
/// listing every violated condition.
GroupSpec make_group_spec(BCData data, Variant variant, std::optional<Elem> v1 = std::nullopt,
                          std::optional<Elem> v2 = std::nullopt, int cartan_search_bound = 6);

/// Membership of c in the subgroup of K^x generated by ratios of nonzero
/// elements of W: depth one is linear algebra, deeper products are searched
/// over a finite pool of basis ratios.
Tri in_ratio_group(const Subspace& W, const Subfield& ambient, const Elem& c, int bound);

struct Atom {
    enum class Kind { Root, Cartan, Reflection };
    Kind kind = Kind::Root;
    Root root;         // Kind::Root
    int index = 0;     // Kind::Cartan / Kind::Reflection, 1-based simple index
    Elem coeff;        // Kind::Root / Kind::Cartan
    bool inverse = false;  // Kind::Reflection: use the inverse representative

    static Atom root_elem(Root a, Elem c) { return {Kind::Root, std::move(a), 0, std::move(c), false}; }
    static Atom cartan(int i, Elem c) { return {Kind::Cartan, {}, i, std::move(c), false}; }
    static Atom reflection(int i, bool inv = false) { return {Kind::Reflection, {}, i, Elem::one(), inv}; }
    std::string to_string(const Tower& T) const;
};

using GroupWord = std::vector<Atom>;

/// Matrix of a single atom; throws ConstraintViolation if the atom's
/// coefficient is outside its domain.
QMatrix atom_matrix(const GroupSpec& spec, const Atom& atom);
QMatrix evaluate(const GroupSpec& spec, const GroupWord& word);
/// The fixed representative of s_i in this variant.
QMatrix simple_rep(const GroupSpec& spec, int i);
/// Product of simple representatives along the fixed reduced word of w.
QMatrix weyl_rep(const GroupSpec& spec, const WeylElement& w);
/// Random word of `atoms` atoms with every coefficient inside its domain.
GroupWord random_word(const GroupSpec& spec, int atoms, Rng& rng);

struct NormalForm {
    std::vector<std::pair<Root, Elem>> u_w;  // inverted roots, fixed order
    WeylElement w;
    std::vector<Elem> h;                     // torus coordinates c_1..c_n
    std::vector<std::pair<Root, Elem>> u;    // all positive roots, fixed order

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
    std::string to_string(const Tower& T) const;
};

QMatrix evaluate(const GroupSpec& spec, const NormalForm& nf);

/// Purely algebraic decomposition in Q(E'), no domain checks.  Throws
/// NotInBigGroup if the matrix has the wrong block shape and NotInGroup if
/// it is not of the form u_w s_w h u.
NormalForm decompose(const GroupSpec& spec, const QMatrix& g);

struct DomainCheck {
    bool roots_ok = true;
    Tri cartan = Tri::Yes;
    std::string reason;
};
DomainCheck check_domains(const GroupSpec& spec, const NormalForm& nf);

/// decompose + domain checks; throws NotInGroup on any definite violation.
NormalForm bruhat_normal_form(const GroupSpec& spec, const QMatrix& g);

struct Membership {
    enum class Verdict { Yes, No, UndecidedCartan };
    Verdict verdict = Verdict::No;
    std::optional<NormalForm> normal_form;
    std::string reason;
    bool yes() const { return verdict == Verdict::Yes; }
};
Membership membership(const GroupSpec& spec, const QMatrix& g);
std::string verdict_name(Membership::Verdict v);

/// h(lambda) = diag(lambda I, lambda^-1 I, 1).
QMatrix h_lambda(int n, const Elem& lambda);
/// Spec of h(lambda) G h(lambda)^-1, with data (K/k, lambda^2 V2, lambda^2 V').
GroupSpec conjugate_by_h_lambda(const GroupSpec& spec, const Elem& lambda);

/// Generators of G: simple root groups, Cartan generators and simple
/// representatives, with sampled coefficients.
std::vector<std::pair<std::string, QMatrix>> sample_generators(const GroupSpec& spec, Rng& rng, int per_family);

}  // namespace bcn
