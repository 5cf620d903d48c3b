#include "doctest.h"
#include "oracles.hpp"

#include "bcn/tower.hpp"

using namespace bcn;

namespace {

Poly from_bits(std::uint64_t p) {
    std::vector<Mono> t;
    for (int i = 0; i < 64; ++i)
        if (p >> i & 1) t.push_back(mono_var(0, static_cast<unsigned>(i)));
    return Poly::from_terms(t);
}

Poly random_poly(Rng& rng, int nvars, int terms, unsigned maxdeg) {
    std::vector<Mono> t;
    for (int k = 0; k < terms; ++k) {
        Mono m = 0;
        for (int v = 0; v < nvars; ++v) m += mono_var(v, static_cast<unsigned>(rng() % (maxdeg + 1)));
        t.push_back(m);
    }
    Poly p = Poly::from_terms(t);
    return p.is_zero() ? Poly::one() : p;
}

}  // namespace

TEST_CASE("univariate gcd agrees with bitmask Euclid") {
    Rng rng(1);
    for (int k = 0; k < 300; ++k) {
        std::uint64_t a = rng() & 0xFFFFF, b = rng() & 0xFFFFF, c = (rng() & 0x3FF) | 1;
        if (!a || !b) continue;
        std::uint64_t ac = oracle::bit_mul(a, c), bc = oracle::bit_mul(b, c);
        CHECK(gcd(from_bits(ac), from_bits(bc)) == from_bits(oracle::bit_gcd(ac, bc)));
    }
}

TEST_CASE("multivariate gcd: common factor divides it and cofactors are coprime") {
    Rng rng(2);
    for (int k = 0; k < 60; ++k) {
        Poly a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3), c = random_poly(rng, 3, 3, 2);
        Poly A = a * c, B = b * c;
        Poly g = gcd(A, B);
        REQUIRE(g.divide_exact(c).has_value());
        auto qa = A.divide_exact(g), qb = B.divide_exact(g);
        REQUIRE(qa.has_value());
        REQUIRE(qb.has_value());
        CHECK(gcd(*qa, *qb).is_one());
        CHECK(gcd(A, B) == gcd(B, A));
    }
}

TEST_CASE("monomial exponent overflow is reported") {
    Poly big = Poly::var(0, kMaxExp);
    CHECK_THROWS(big * Poly::var(0, 1));
}

TEST_CASE("rational functions stay canonical") {
    Rng rng(3);
    auto T = make_tower({"t", "u"}, {2, 1});
    for (int k = 0; k < 50; ++k) {
        Elem x = T->random_element(rng, 3, 2), y = T->random_element(rng, 3, 2);
        CHECK(x * x.inv() == Elem::one());
        CHECK((x / y) * y == x);
        CHECK(x + x == Elem());
        CHECK((x + y).sq() == x.sq() + y.sq());
        CHECK(T->sqrt(x.sq()) == x);
    }
    CHECK_THROWS_AS(Elem().inv(), DivisionByZero);
}

TEST_CASE("parse and print round trip") {
    auto T = make_tower({"t", "u"}, {2, 1});
    for (const char* s : {"t^(1/2)", "t^(1/4)*u^(1/2)", "1 + t", "(t + 1)/(u^(1/2) + t^(3/4))", "t^3*u"}) {
        Elem x = T->parse(s);
        CHECK(T->parse(T->to_string(x)) == x);
    }
    CHECK(T->parse("t^(1/2)") * T->parse("t^(1/2)") == T->t(0));
    CHECK_THROWS_AS(T->parse("t^(1/8)"), ParseError);
    CHECK_THROWS_AS(T->parse("w"), ParseError);
}

TEST_CASE("square roots exist exactly up to the top of the tower") {
    auto T = make_tower({"t"}, {2});
    CHECK(T->try_sqrt(T->t(0)).has_value());
    CHECK(T->try_sqrt(T->root(0, 1)).has_value());
    CHECK_FALSE(T->try_sqrt(T->root(0, 2)).has_value());
    CHECK_THROWS_AS(T->sqrt(T->root(0, 2)), NoSquareRootInTower);
}

TEST_CASE("coordinates round trip and tower dimensions match exponent counts") {
    Rng rng(4);
    auto T = make_tower({"t", "u"}, {2, 1});
    CHECK(T->dim(0) == oracle::monomial_field_degree({2, 1}, 0));
    CHECK(T->dim(1) == 2 * 2 * oracle::monomial_field_degree({2, 1}, 0));
    for (int L = 0; L <= 1; ++L)
        for (int k = 0; k < 20; ++k) {
            Elem d = T->random_scalar(rng, L, 2, 1);
            if (d.is_zero()) continue;
            Elem x = T->random_element(rng, 3, 2) / d;
            CHECK(T->from_coords(T->coords(x, L), L) == x);
        }
}

TEST_CASE("subfield degrees agree with the monomial degree count") {
    auto T = make_tower({"t", "u", "v"}, {2, 1, 2});
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> a(3);
        std::vector<Elem> gens;
        for (int i = 0; i < 3; ++i) {
            a[i] = static_cast<int>(rng() % static_cast<unsigned>(T->root_exp(i) + 1));
            if (a[i]) gens.push_back(T->root(i, a[i]));
        }
        Subfield K = Subfield::generated(T, gens);
        CHECK(K.degree() == oracle::monomial_field_degree(a, 0));
        for (int j = 0; j <= 3; ++j)
            CHECK(frobenius_shifted_subfield(K, std::uint64_t{1} << j).degree() == oracle::monomial_field_degree(a, j));
        // odd multiples do not change the 2-adic valuation
        CHECK(frobenius_shifted_subfield(K, 3).degree() == oracle::monomial_field_degree(a, 0));
    }
}

TEST_CASE("compositum of monomial subfields") {
    auto T = make_tower({"t", "u"}, {2, 2});
    Subfield A = Subfield::generated(T, {T->root(0, 2)});
    Subfield B = Subfield::generated(T, {T->root(1, 1)});
    Subfield C = compositum({A, B});
    CHECK(C.degree() == oracle::monomial_field_degree({2, 1}, 0));
    CHECK(C.contains(A));
    CHECK(C.contains(B));
    CHECK_FALSE(A.contains(B));
    CHECK(C.contains(T->root(0, 2) * T->root(1, 1)));
}

TEST_CASE("ratio fields and subspace intersections") {
    auto T = make_tower({"t"}, {2});
    Elem s = T->root(0, 1);
    Subspace line_s(T, base_scalars(T), {s});
    Subspace line_1(T, base_scalars(T), {Elem::one()});
    Subspace plane(T, base_scalars(T), {Elem::one(), s});
    CHECK(subfield_generated_by_ratios(plane).degree() == 2);
    CHECK(subfield_generated_by_ratios(line_s).degree() == 1);
    CHECK(intersect_trivially(line_s, line_1));
    CHECK_FALSE(intersect_trivially(line_s, plane));
    CHECK(plane.contains(Elem::one() + s));
    CHECK_FALSE(plane.contains(T->root(0, 2)));
    CHECK_FALSE(meets_scaled(line_1, s));
    CHECK(meets_scaled(plane, s));  // s * s = t
    CHECK(meets_scaled(plane, T->t(0)));
    CHECK_FALSE(meets_scaled(plane, T->root(0, 2)));
}

TEST_CASE("subfield inverse by solving agrees with field inverse") {
    auto T = make_tower({"t", "u"}, {1, 1});
    Subfield K = Subfield::generated(T, {T->root(0, 1), T->root(1, 1)});
    Rng rng(6);
    for (int k = 0; k < 10; ++k) {
        Elem x = K.random(rng);
        CHECK(K.inverse_by_solve(x) == x.inv());
        CHECK(K.contains(x.inv()));
    }
}
