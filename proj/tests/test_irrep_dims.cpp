#include "doctest.h"
#include "oracles.hpp"

#include "bcn/config.hpp"
#include "bcn/irrep_dims.hpp"

using namespace bcn;

TEST_CASE("2-adic expansion") {
    CHECK(two_adic_expansion(0).empty());
    CHECK(two_adic_expansion(5) == std::vector<int>{1, 0, 1});
    CHECK(two_adic_expansion(6) == std::vector<int>{0, 1, 1});
    CHECK(dim_LM_rank1(0) == 1);
    CHECK(dim_LM_rank1(1) == 2);
    CHECK(dim_LM_rank1(3) == 4);
}

TEST_CASE("tau-adic expansion") {
    CHECK(tau_adic_expansion(0, 0).empty());
    CHECK(tau_adic_expansion(1, 0) == std::vector<int>{1});
    CHECK(tau_adic_expansion(0, 1) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(tau_adic_expansion(-1, 0), NotExpandable);
    for (int a = 0; a <= 64; ++a)
        for (int b = 0; b <= 64; ++b) {
            auto bits = tau_adic_expansion(a, b);
            for (int r : bits) CHECK((r == 0 || r == 1));
            CHECK(tau_adic_evaluate(bits) == std::pair<std::int64_t, std::int64_t>{a, b});
        }
}

TEST_CASE("rank-1 demo dimensions") {
    GroupSpec S = build_spec(demo_rank1());
    CHECK(dim_LG(S, {0}).dim_LG == 1);
    DimResult one = dim_LG(S, {1});
    CHECK(one.dim_LG == 4);
    CHECK(one.closed_form == 4);
    CHECK(one.lc.degree == oracle::monomial_field_degree({1}, 0));
    DimResult two = dim_LG(S, {2});
    CHECK(two.dim_LG == 2);
    CHECK(two.lc.degree == oracle::monomial_field_degree({1}, 1));
    for (std::uint64_t l = 1; l < 200; ++l) {
        DimResult r = dim_LG(S, {l});
        CHECK(r.dim_LG == r.closed_form);
        CHECK(*r.dim_LG == *r.dim_LM * r.lc.degree);
    }
}

TEST_CASE("rank-2 variant: explicit formula agrees with the product formula") {
    GroupSpec S = build_spec(demo_rank2());
    DimResult r = dim_LG(S, {1, 0});
    CHECK(r.closed_form == S.data.K.degree() * 4);
    CHECK(r.dim_LG == r.closed_form);
    for (std::uint64_t a = 0; a < 12; ++a)
        for (std::uint64_t b = 0; b < 12; ++b) {
            DimResult d = dim_LG(S, {a, b});
            CHECK(d.lc.chain);
            CHECK(d.lc.degree == d.lc.max_degree);
            if (a || b) CHECK(d.dim_LG == d.closed_form);
        }
}

TEST_CASE("dim_LG of the zero weight is 1 in every configuration") {
    Config c = demo_rank1();
    c.rank = 3;
    for (Variant v : {Variant::Standard, Variant::Derived}) CHECK(dim_LG(build_spec(c, v), {0, 0, 0}).dim_LG == 1);
    CHECK(dim_LG(build_spec(demo_rank2()), {0, 0}).dim_LG == 1);
    CHECK(dim_LG(build_spec(demo_rank1()), {0}).dim_LG == 1);
}

TEST_CASE("n >= 3 needs an external Levi factor") {
    Config c = demo_rank1();
    c.rank = 3;
    GroupSpec S = build_spec(c);
    CHECK_THROWS_AS(dim_LG(S, {1, 0, 0}), RankRequiresExternalLM);
    DimResult r = dim_LG(S, {1, 0, 0}, 6);
    CHECK(r.lm_source == "external");
    CHECK(r.dim_LG == 6 * r.lc.degree);
}

TEST_CASE("Cartan factor: monotone under doubling and a chain in all three cases") {
    Config c = demo_rank1();
    c.rank = 2;
    std::vector<GroupSpec> specs{build_spec(c, Variant::Standard), build_spec(c, Variant::Derived),
                                 build_spec(demo_rank2())};
    Rng rng(12);
    for (const GroupSpec& S : specs) {
        CartanProfile p = cartan_profile(S);
        for (int k = 0; k < 30; ++k) {
            DominantWeight l{rng() % 9, rng() % 9};
            DimLC d = dim_LC(p, l);
            CHECK(d.chain);
            CHECK(d.degree == d.max_degree);
            for (std::size_t i = 0; i < l.size(); ++i) {
                DominantWeight l2 = l;
                l2[i] *= 2;
                CHECK(dim_LC(p, l2).factors[i].degree() <= d.factors[i].degree());
            }
        }
    }
}

TEST_CASE("weight parsing") {
    CHECK(parse_weight("1,0") == DominantWeight{1, 0});
    CHECK(parse_weight(" 3 , 4 ") == DominantWeight{3, 4});
    CHECK_THROWS(parse_weight("1,-2"));
    CHECK_THROWS(parse_weight(""));
}
