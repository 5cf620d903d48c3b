// Purely inseparable towers over F2(t_1..t_m) and their linear algebra.
//
// The global tower E' = k(t_i^(1/2^e_i)) is presented as the rational function
// field F2(s_1..s_m) with s_i = t_i^(1/2^e_i).  Elements are RatFunc in the
// s_i; k-coordinates with respect to the monomial basis prod s_i^r_i
// (0 <= r_i < 2^e_i) are computed on demand.  "Level L" denotes the subfield
// k^(2^L) = F2(s_i^(2^(e_i+L))); linear algebra over K^2-subspaces needs L = 1.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcn/ratfunc.hpp"

namespace bcn {

using Elem = RatFunc;
using Rng = std::mt19937_64;

struct NoSquareRootInTower : std::domain_error {
    NoSquareRootInTower() : std::domain_error("no square root in tower") {}
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Tower {
public:
    /// names[i] is the base indeterminate t_i; root_exp[i] = e_i adjoins t_i^(1/2^e_i).
    Tower(std::vector<std::string> names, std::vector<int> root_exp);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int root_exp(int i) const { return exp_[i]; }
    int index_of(const std::string& name) const;  // -1 if absent

    /// Same tower with extra transcendental base variables appended.
    std::shared_ptr<const Tower> with_symbols(const std::vector<std::string>& extra) const;

    /// [E':k^(2^L)] as a power of two.
    std::size_t dim(int level = 0) const;
    /// The monomial basis over level L, in mixed-radix order (last variable fastest).
    std::vector<Mono> basis(int level = 0) const;
    /// log2 of the exponent period of s_v over level L.
    int residue_bits(int v, int level) const { return exp_[v] + level; }

    Elem t(int i) const { return RatFunc::var(i, 1u << exp_[i]); }
    /// t_i^(p/2^j) for j <= e_i, p >= 0.
    Elem root(int i, int j, unsigned p = 1) const;

    Elem parse(const std::string& s) const;
    std::string to_string(const Elem& x) const;
    /// Print an element of k (level 0) using integral powers of the t_i.
    std::string base_to_string(const Elem& x) const;
    std::string basis_name(Mono m) const;

    /// Coordinates of x over level L with respect to basis(L), up to the common
    /// nonzero factor 1/den (den lies in the level field).  Suitable for
    /// span and membership questions.
    std::vector<Elem> coords_projective(const Elem& x, int level = 0) const;
    std::vector<Elem> coords(const Elem& x, int level = 0) const;
    Elem from_coords(const std::vector<Elem>& c, int level = 0) const;
    bool in_level(const Elem& x, int level) const;

    Elem inv(const Elem& x) const { return x.inv(); }
    Elem sq(const Elem& x) const { return x.sq(); }
    Elem sqrt(const Elem& x) const;
    std::optional<Elem> try_sqrt(const Elem& x) const;

    /// Random polynomial element of level L: up to `terms` monomials of degree
    /// <= maxdeg in each t_i^(2^L).
    Elem random_scalar(Rng& rng, int level = 0, int terms = 2, int maxdeg = 1) const;
    /// Random nonzero polynomial element of E' in the s_i (exponents below
    /// (maxdeg+1)*2^e_i).
    Elem random_element(Rng& rng, int terms = 2, int maxdeg = 1) const;

private:
    std::vector<std::string> names_;
    std::vector<int> exp_;
};

using TowerPtr = std::shared_ptr<const Tower>;
TowerPtr make_tower(std::vector<std::string> names, std::vector<int> root_exp);

/// Reduced row echelon form over a level field.
class Echelon {
public:
    explicit Echelon(std::size_t width = 0) : width_(width) {}
    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    /// Returns true if v was independent of the current rows.
    bool insert(std::vector<Elem> v);
    std::vector<Elem> reduce(std::vector<Elem> v) const;
    bool contains(const std::vector<Elem>& v) const;
    /// Solve v = sum a_r rows_r; nullopt if v is not in the span.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& v) const;
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

private:
    std::size_t width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> piv_;
};

class Subfield;

/// A field F with k^(2^L) <= F, spanned over level L by `span`.
struct ScalarField {
    std::string name;
    int level = 0;
    std::vector<Elem> span;
};

/// Finite-dimensional F-subspace of E' for a declared scalar field F.
class Subspace {
public:
    Subspace() = default;
    Subspace(TowerPtr tower, ScalarField scalars, std::vector<Elem> basis);

    const TowerPtr& tower() const { return tower_; }
    const ScalarField& scalars() const { return scalars_; }
    const std::vector<Elem>& basis() const { return basis_; }
    int level() const { return scalars_.level; }
    /// Spanning set over the level field of `scalars`.
    const std::vector<Elem>& level_span() const { return span_; }
    /// Spanning set over level L >= level().
    std::vector<Elem> span_at_level(int L) const;
    std::size_t dim_level() const { return ech_.rank(); }
    bool is_zero() const { return ech_.rank() == 0; }

    bool contains(const Elem& x) const;
    /// Closed under multiplication by F (checked on basis pairs).
    bool closed_under(const ScalarField& F) const;
    Subspace scaled(const Elem& lambda) const;

    Elem random(Rng& rng, bool nonzero = true, int terms = 2, int maxdeg = 1) const;
    /// An element of the ambient `outer` not in this subspace.
    Elem random_outside(Rng& rng, const Subspace& outer) const;

private:
    TowerPtr tower_;
    ScalarField scalars_;
    std::vector<Elem> basis_;
    std::vector<Elem> span_;
    Echelon ech_;
};

/// The same set viewed over k (level 0) when it is closed under k; otherwise
/// the input unchanged.  Intersections and spans are set-level notions, so
/// the coarser level gives the same answers with far smaller coordinates.
Subspace coarsen(const Subspace& S);

/// Sum and intersection dimension over a common level.
std::size_t dim_of_sum(const std::vector<const Subspace*>& spaces, int level);
/// a ∩ b = 0.  A yes is exact; a no rests on rank deficiency at three
/// random points of GF(2^63).
bool intersect_trivially(const Subspace& a, const Subspace& b);
/// cW ∩ W ≠ 0, i.e. c is a ratio of two nonzero elements of W.
bool meets_scaled(const Subspace& W, const Elem& c);

/// A subfield k <= F <= E', stored by a k-basis.
class Subfield {
public:
    Subfield() = default;
    /// Smallest subfield containing k and the generators (saturation).
    static Subfield generated(TowerPtr tower, const std::vector<Elem>& generators);
    static Subfield base(TowerPtr tower) { return generated(std::move(tower), {}); }

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Elem>& basis() const { return basis_; }
    std::size_t degree() const { return basis_.size(); }
    bool contains(const Elem& x) const;
    bool contains(const Subfield& other) const;
    friend bool operator==(const Subfield& a, const Subfield& b) {
        return a.degree() == b.degree() && a.contains(b);
    }
    /// The field as a scalar field over level 0.
    ScalarField as_scalars(const std::string& name) const { return {name, 0, basis_}; }
    /// F^2 as a scalar field over level 1.
    ScalarField squares(const std::string& name) const;
    /// Inverse of x computed by solving (mult-by-x) y = 1 inside this field.
    Elem inverse_by_solve(const Elem& x) const;
    Elem random(Rng& rng, bool nonzero = true, int terms = 2, int maxdeg = 1) const;
    Subspace as_subspace() const;

private:
    TowerPtr tower_;
    std::vector<Elem> basis_;
    Echelon ech_;
};

ScalarField base_scalars(const TowerPtr& tower);

/// k<S>: subfield generated over k by ratios of nonzero elements of S.
Subfield subfield_generated_by_ratios(const Subspace& S);
/// k(F^(2^v2(lambda))); lambda = 0 gives k.
Subfield frobenius_shifted_subfield(const Subfield& F, std::uint64_t lambda);
Subfield compositum(const std::vector<Subfield>& fields);
int two_adic_valuation(std::uint64_t x);

}  // namespace bcn
