#include "bcn/group_data.hpp"

#include <algorithm>

namespace bcn {

Scalars parse_scalars(const std::string& s) {
    if (s == "k") return Scalars::k;
    if (s == "K2") return Scalars::K2;
    if (s == "kK2") return Scalars::kK2;
    if (s == "K0") return Scalars::K0;
    if (s == "K") return Scalars::K;
    throw std::invalid_argument("unknown scalar field '" + s + "' (expected k, K2, kK2, K0 or K)");
}

std::string scalars_name(Scalars s) {
    switch (s) {
        case Scalars::k: return "k";
        case Scalars::K2: return "K2";
        case Scalars::kK2: return "kK2";
        case Scalars::K0: return "K0";
        case Scalars::K: return "K";
    }
    return "?";
}

namespace {

ScalarField field_scalars(const TowerPtr& T, const Subfield& K, const Subfield* K0, Scalars s) {
    switch (s) {
        case Scalars::k: return base_scalars(T);
        case Scalars::K2: return K.squares("K2");
        case Scalars::kK2: {
            std::vector<Elem> sq;
            for (const Elem& b : K.basis()) sq.push_back(b.sq());
            return Subfield::generated(T, sq).as_scalars("kK2");
        }
        case Scalars::K0:
            if (!K0) throw std::invalid_argument("K0 is not available here");
            return K0->as_scalars("K0");
        case Scalars::K: return K.as_scalars("K");
    }
    throw std::logic_error("unreachable");
}

Subfield ratios_of_v0(const TowerPtr& T, const Subspace& V2, const Subspace& Vp) {
    std::vector<Elem> span = V2.span_at_level(1);
    for (const Elem& x : Vp.span_at_level(1)) span.push_back(x);
    return subfield_generated_by_ratios(Subspace(T, {"k2", 1, {Elem::one()}}, span));
}

}  // namespace

BCData make_bc_data(TowerPtr tower, int rank, const std::vector<Elem>& K_generators,
                    const std::vector<Elem>& V2_basis, const std::vector<Elem>& Vp_basis, Scalars V2_over,
                    Scalars Vp_over, const std::optional<std::vector<Elem>>& Vpp_basis, Scalars Vpp_over) {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (V2_over == Scalars::K0 || Vp_over == Scalars::K0)
        throw std::invalid_argument("V2 and V' cannot be declared over K0");
    BCData d;
    d.tower = tower;
    d.rank = rank;
    d.K = Subfield::generated(tower, K_generators);
    d.V2 = Subspace(tower, field_scalars(tower, d.K, nullptr, V2_over), V2_basis);
    d.Vp = Subspace(tower, field_scalars(tower, d.K, nullptr, Vp_over), Vp_basis);
    if (Vpp_basis) {
        std::optional<Subfield> K0;
        if (Vpp_over == Scalars::K0) {
            if (d.V2.is_zero() && d.Vp.is_zero()) throw std::invalid_argument("K0 of zero data");
            K0 = ratios_of_v0(tower, d.V2, d.Vp);
        }
        d.Vpp = Subspace(tower, field_scalars(tower, d.K, K0 ? &*K0 : nullptr, Vpp_over), *Vpp_basis);
    }
    return d;
}

ScalarField scalar_field(const BCData& d, Scalars s) {
    if (s == Scalars::K0) {
        Subfield K0 = compute_K0(d);
        return field_scalars(d.tower, d.K, &K0, s);
    }
    return field_scalars(d.tower, d.K, nullptr, s);
}

Subspace v0_space(const BCData& d) {
    std::vector<Elem> span = d.V2.span_at_level(1);
    for (const Elem& x : d.Vp.span_at_level(1)) span.push_back(x);
    return Subspace(d.tower, {"k2", 1, {Elem::one()}}, span);
}

Subfield compute_K0(const BCData& d) { return ratios_of_v0(d.tower, d.V2, d.Vp); }

bool ValidationReport::has(const std::string& id) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.id == id; });
}

ValidationReport validate(const BCData& d) {
    ValidationReport r;
    auto fail = [&](const char* id, const char* name) { r.violations.push_back({id, name}); };
    auto inside_K = [&](const Subspace& S) {
        return std::all_of(S.level_span().begin(), S.level_span().end(),
                           [&](const Elem& x) { return d.K.contains(x); });
    };

    if (d.K.degree() <= 1) fail("k_eq_K", "K/k is trivial");
    bool v2_zero = d.V2.is_zero(), vp_zero = d.Vp.is_zero();
    if (v2_zero) fail("v2_zero", "V^(2) = 0");
    if (vp_zero) fail("vp_zero", "V′ = 0");
    if (!inside_K(d.V2)) fail("v2_not_in_K", "V^(2) ⊄ K");
    if (!inside_K(d.Vp)) fail("vp_not_in_K", "V′ ⊄ K");
    if (!d.V2.closed_under(scalar_field(d, Scalars::K2))) fail("v2_not_K2", "V^(2) not a K²-subspace");
    if (!d.Vp.closed_under(scalar_field(d, Scalars::kK2))) fail("vp_not_kK2", "V′ not a kK²-subspace");
    if (!v2_zero && !vp_zero) {
        // compare over k^2 so that both spaces are seen with the same scalars
        Subspace a(d.tower, {"k2", 1, {Elem::one()}}, d.V2.span_at_level(1));
        Subspace b(d.tower, {"k2", 1, {Elem::one()}}, d.Vp.span_at_level(1));
        if (!intersect_trivially(a, b)) fail("v2_cap_vp", "V^(2) ∩ V′ ≠ 0");
    }
    if (v2_zero && vp_zero) return r;

    Subfield K0 = compute_K0(d);
    if (d.rank == 1 && !(K0 == d.K)) fail("k0_ne_K_rank1", "K₀ ≠ K (n = 1)");

    if (d.Vpp) {
        const Subspace& W = *d.Vpp;
        if (d.rank != 2) fail("vpp_rank", "V″ requires n = 2");
        if (W.is_zero()) {
            fail("vpp_zero", "V″ = 0");
            return r;
        }
        if (!inside_K(W)) fail("vpp_not_in_K", "V″ ⊄ K");
        if (!W.closed_under(K0.as_scalars("K0"))) fail("vpp_not_K0", "V″ not a K₀-subspace");
        bool whole = std::all_of(d.K.basis().begin(), d.K.basis().end(), [&](const Elem& x) { return W.contains(x); });
        if (whole) fail("vpp_not_proper", "V″ not proper");
        if (!(subfield_generated_by_ratios(W) == d.K)) fail("vpp_ratios", "k⟨V″⟩ ≠ K");
    }
    return r;
}

bool DerivedData::in_V2(const Tower& T, const Elem& x) const {
    auto r = T.try_sqrt(x);
    return r && V.contains(*r);
}

DerivedData derive(const BCData& d) {
    const Tower& T = *d.tower;
    DerivedData out;
    out.K0 = compute_K0(d);
    std::vector<Elem> roots;
    for (const Elem& b : d.V2.basis()) {
        auto r = T.try_sqrt(b);
        if (!r) throw TowerTooSmall("the tower does not contain the square root of " + T.to_string(b));
        roots.push_back(*r);
    }
    out.V = Subspace(d.tower, d.K.as_scalars("K"), roots);
    std::vector<Elem> gens = d.K.basis();
    for (const Elem& x : out.V.level_span()) gens.push_back(x);
    out.E = Subfield::generated(d.tower, gens);
    out.V0 = coarsen(v0_space(d));
    out.one_in_Vp = d.Vp.contains(Elem::one());
    out.one_in_V = out.V.contains(Elem::one());
    out.one_in_Vpp = d.Vpp && d.Vpp->contains(Elem::one());
    return out;
}

std::optional<std::pair<Elem, Elem>> split_v0(const BCData& d, const Elem& z) {
    const Tower& T = *d.tower;
    const std::size_t D = T.dim(1);
    // rows [coords(b) | coords(b)] for b in V2 and [coords(b) | 0] for b in V':
    // reducing [coords(z) | 0] leaves [0 | coords(x)]
    Echelon ech(2 * D);
    auto row = [&](const Elem& b, bool tag) {
        auto c = T.coords(b, 1);
        std::vector<Elem> r(2 * D);
        for (std::size_t i = 0; i < D; ++i) {
            r[i] = c[i];
            if (tag) r[D + i] = c[i];
        }
        return r;
    };
    for (const Elem& b : d.V2.span_at_level(1)) ech.insert(row(b, true));
    for (const Elem& b : d.Vp.span_at_level(1)) ech.insert(row(b, false));
    auto r = ech.reduce(row(z, false));
    for (std::size_t i = 0; i < D; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    Elem x = T.from_coords(std::vector<Elem>(r.begin() + static_cast<std::ptrdiff_t>(D), r.end()), 1);
    return std::make_pair(x, z + x);
}

BCData scale_data(const BCData& d, const Elem& mu) {
    if (mu.is_zero()) throw DivisionByZero();
    BCData r = d;
    r.V2 = d.V2.scaled(mu);
    r.Vp = d.Vp.scaled(mu);
    return r;
}

BCData normalize_data(const BCData& d, const Elem& v) {
    if (v.is_zero()) throw std::invalid_argument("normalizing element must be nonzero");
    if (!d.Vp.contains(v)) throw std::invalid_argument("normalizing element must lie in V′");
    return scale_data(d, v);
}

}  // namespace bcn
