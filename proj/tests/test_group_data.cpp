#include "doctest.h"
#include "oracles.hpp"

#include "bcn/group_data.hpp"

using namespace bcn;

namespace {

struct Rank1 {
    TowerPtr T = make_tower({"t"}, {2});
    Elem s = T->root(0, 1);  // t^(1/2)
    BCData data(std::vector<Elem> Vp = {Elem::one()}) const { return make_bc_data(T, 1, {s}, {s}, Vp); }
};

struct Rank2 {
    TowerPtr T = make_tower({"t", "u", "v"}, {2, 1, 1});
    Elem st = T->root(0, 1), su = T->root(1, 1), sv = T->root(2, 1);
    BCData data(std::vector<Elem> Vpp) const {
        return make_bc_data(T, 2, {st, su, sv}, {st}, {Elem::one()}, Scalars::K2, Scalars::kK2, Vpp, Scalars::K0);
    }
    BCData demo() const { return data({Elem::one(), su, sv}); }
};

}  // namespace

TEST_CASE("rank-1 demo is valid with K0 = K") {
    Rank1 r;
    BCData d = r.data();
    CHECK(validate(d).ok());
    Subfield K0 = compute_K0(d);
    CHECK(K0 == d.K);
    CHECK(K0.degree() == oracle::monomial_field_degree({1}, 0));
}

TEST_CASE("equal lines violate V2 ∩ V' = 0") {
    Rank1 r;
    ValidationReport rep = validate(r.data({r.s}));
    CHECK(rep.has("v2_cap_vp"));
}

TEST_CASE("rank-2 demo is valid with [K:K0] = 4") {
    Rank2 r;
    BCData d = r.demo();
    ValidationReport rep = validate(d);
    for (const auto& v : rep.violations) INFO(v.id);
    CHECK(rep.ok());
    Subfield K0 = compute_K0(d);
    CHECK(d.K.degree() == oracle::monomial_field_degree({1, 1, 1}, 0));
    CHECK(K0.degree() == 2);
    CHECK(d.K.degree() / K0.degree() == 4);
    CHECK(K0.contains(r.st));
}

TEST_CASE("single-condition mutations are rejected by name") {
    Rank1 r1;
    Rank2 r2;
    SUBCASE("V' not closed under kK2") {
        // kK^2 = k in the demo tower, so the mutation needs K = k(t^(1/4))
        auto T = make_tower({"t"}, {3});
        Elem q = T->root(0, 2);
        BCData good = make_bc_data(T, 1, {q}, {q}, {Elem::one()});
        CHECK(validate(good).ok());
        BCData bad = make_bc_data(T, 1, {q}, {q}, {Elem::one()}, Scalars::K2, Scalars::k);
        ValidationReport rep = validate(bad);
        CHECK(rep.has("vp_not_kK2"));
        CHECK(rep.violations.size() == 1);
    }
    SUBCASE("V2 ∩ V' ≠ 0") {
        CHECK(validate(r1.data({r1.s})).has("v2_cap_vp"));
    }
    SUBCASE("V'' not proper") {
        BCData d = r2.data({Elem::one(), r2.su, r2.sv, r2.su * r2.sv});
        CHECK(validate(d).has("vpp_not_proper"));
    }
    SUBCASE("k<V''> smaller than K") {
        BCData d = r2.data({Elem::one(), r2.su});
        CHECK(validate(d).has("vpp_ratios"));
    }
}

TEST_CASE("derive: V = K t^(1/4) and E = F2(t^(1/4)) for the rank-1 demo") {
    Rank1 r;
    DerivedData dd = derive(r.data());
    CHECK(dd.V.contains(r.T->root(0, 2)));
    CHECK(dd.E.degree() == oracle::monomial_field_degree({2}, 0));
    CHECK(dd.one_in_Vp);
    CHECK_FALSE(dd.one_in_V);
    CHECK(dd.in_V2(*r.T, r.s));
    CHECK_FALSE(dd.in_V2(*r.T, Elem::one()));
}

TEST_CASE("derive: V2 = K^2 gives V = K and E = K") {
    auto T = make_tower({"t"}, {2});
    Elem s = T->root(0, 1);
    BCData d = make_bc_data(T, 1, {s}, {Elem::one()}, {s}, Scalars::K2, Scalars::kK2);
    DerivedData dd = derive(d);
    CHECK(dd.E == d.K);
    CHECK(dd.V.contains(Elem::one()));
    CHECK(dd.V.contains(s));
}

TEST_CASE("derive reports a tower that is too small") {
    auto T = make_tower({"t"}, {1});
    Elem s = T->root(0, 1);
    BCData d = make_bc_data(T, 1, {s}, {s}, {Elem::one()});
    CHECK_THROWS_AS(derive(d), TowerTooSmall);
}

TEST_CASE("normalization keeps validity and K0, and puts 1 into V'") {
    auto T = make_tower({"t"}, {3});
    Elem s = T->root(0, 1), t = T->t(0);
    BCData d = make_bc_data(T, 1, {s}, {s}, {t});
    REQUIRE(validate(d).ok());
    BCData n = normalize_data(d, t);
    CHECK(n.Vp.contains(Elem::one()));
    CHECK(validate(n).ok());
    CHECK(compute_K0(n) == compute_K0(d));
    CHECK(n.V2.contains(t * s));
    BCData same = normalize_data(make_bc_data(T, 1, {s}, {s}, {Elem::one()}), Elem::one());
    CHECK(same.Vp.contains(Elem::one()));
    CHECK(same.V2.contains(s));
    CHECK_THROWS(normalize_data(d, s));  // s is not in V'
}

TEST_CASE("c^2 + c' splits uniquely") {
    Rank2 r;
    BCData d = r.demo();
    DerivedData dd = derive(d);
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        Elem c = dd.V.random(rng), cp = d.Vp.random(rng);
        auto sp = split_v0(d, c.sq() + cp);
        REQUIRE(sp.has_value());
        CHECK(sp->first == c.sq());
        CHECK(sp->second == cp);
    }
    CHECK_FALSE(split_v0(d, r.su).has_value());
}
