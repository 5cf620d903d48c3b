#include "doctest.h"

#include "bcn/checks.hpp"
#include "bcn/config.hpp"

using namespace bcn;

namespace {

void require_ok(const CheckReport& r) {
    for (const auto& c : r.counterexamples) INFO(c);
    CHECK(r.checks > 0);
    CHECK(r.ok());
}

}  // namespace

TEST_CASE("words: empty, projection, reflection squares") {
    GroupSpec S = build_spec(demo_rank1());
    CHECK(evaluate(S, GroupWord{}).is_identity());
    const Root an = simple_roots(1)[0];
    QMatrix y = evaluate(S, {Atom::root_elem(an, S.derived.V.basis().front())});
    Elem c = S.derived.V.basis().front();
    CHECK(y.pi() == root_element(2 * an, c.sq()));
    CHECK(evaluate(S, {Atom::reflection(1), Atom::reflection(1)}).is_identity());
    CHECK(evaluate(S, {Atom::reflection(1), Atom::reflection(1, true)}).is_identity());
}

TEST_CASE("normal form of the identity") {
    GroupSpec S = build_spec(demo_rank2());
    NormalForm nf = decompose(S, QMatrix::identity_q(2));
    CHECK(nf.w.is_identity());
    CHECK(nf.u_w.empty());
    CHECK(nf.h == std::vector<Elem>{Elem::one(), Elem::one()});
    for (const auto& [a, c] : nf.u) CHECK(c.is_zero());
}

TEST_CASE("rank 1: s b s lies in the cell of s") {
    GroupSpec S = build_spec(demo_rank1());
    Rng rng(4);
    const Root a = simple_roots(1)[0];
    for (int k = 0; k < 20; ++k) {
        QMatrix b = atom_matrix(S, Atom::cartan(1, S.random_cartan_coeff(1, rng))) *
                    root_element(a, S.random_root_coeff(a, rng)) *
                    root_element(2 * a, S.random_root_coeff(2 * a, rng));
        QMatrix s = simple_rep(S, 1);
        NormalForm nf = decompose(S, s * b * s);
        CHECK(nf.w == WeylElement::simple(1, 1));
        CHECK(evaluate(S, nf) == s * b * s);
        CHECK(membership(S, s * b * s).yes());
    }
}

TEST_CASE("coefficients outside their domains are rejected") {
    for (const Config& c : {demo_rank1(), demo_rank2()}) {
        GroupSpec S = build_spec(c);
        Rng rng(5);
        const int n = S.rank();
        const Root an = simple_roots(n)[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k < 10; ++k) {
            Elem bad_long = S.random_outside_root_domain(2 * an, rng);
            CHECK_FALSE(S.in_root_domain(2 * an, bad_long));
            CHECK_FALSE(membership(S, root_element(2 * an, bad_long)).yes());
            CHECK_THROWS_AS(atom_matrix(S, Atom::root_elem(2 * an, bad_long)), ConstraintViolation);
            Elem bad_vs = S.random_outside_root_domain(an, rng);
            CHECK_FALSE(membership(S, root_element(an, bad_vs)).yes());
        }
    }
}

TEST_CASE("matrices outside Q are reported") {
    GroupSpec S = build_spec(demo_rank1());
    QMatrix m(3);
    m.at(0, 0) = Elem::one();
    m.at(1, 1) = Elem::one();
    m.at(2, 0) = Elem::one();
    m.at(0, 2) = Elem::one();
    Membership r = membership(S, m);
    CHECK_FALSE(r.yes());
}

TEST_CASE("property suites on the rank-1 demo") {
    GroupSpec S = build_spec(demo_rank1());
    Rng rng(6);
    require_ok(check_round_trip(S, 40, 12, rng));
    require_ok(check_mu_injectivity(S, 40, rng));
    require_ok(check_bn_axioms(S, 20, rng));
    require_ok(check_levi_containment(S, 5, rng));
    require_ok(check_conjugation(S, 5, rng));
    require_ok(check_constraint_stability(S, 5, rng));
}

TEST_CASE("property suites on n = 2 standard and derived") {
    Config c = demo_rank1();
    c.rank = 2;
    for (Variant v : {Variant::Standard, Variant::Derived}) {
        GroupSpec S = build_spec(c, v);
        Rng rng(7);
        require_ok(check_round_trip(S, 20, 12, rng));
        require_ok(check_bn_axioms(S, 10, rng));
        require_ok(check_constraint_stability(S, 3, rng));
        require_ok(check_conjugation(S, 3, rng));
    }
}

TEST_CASE("property suites on the rank-2 variant") {
    GroupSpec S = build_spec(demo_rank2());
    Rng rng(8);
    require_ok(check_round_trip(S, 8, 10, rng));
    require_ok(check_bn_axioms(S, 5, rng));
    require_ok(check_levi_containment(S, 2, rng));
    require_ok(check_perfectness_witnesses(S, 5, rng));
    require_ok(check_constraint_stability(S, 2, rng));
}

TEST_CASE("SO generators are members once 1 lies in V") {
    // scale by c^-2 for c in V: V2 becomes c^-2 V2, which contains 1
    GroupSpec S = build_spec(demo_rank1());
    Elem c = S.derived.V.basis().front();
    BCData d = scale_data(S.data, c.sq().inv());
    GroupSpec M = make_group_spec(d, Variant::Standard);
    REQUIRE(M.derived.one_in_V);
    CHECK_FALSE(M.derived.one_in_Vp);
    Rng rng(9);
    CheckReport r = check_levi_containment(M, 5, rng);
    require_ok(r);
}

TEST_CASE("Levi check refuses data with 1 in neither space") {
    // scaling by t^(1/2) + 1 moves 1 out of both spaces
    GroupSpec S = build_spec(demo_rank1());
    BCData d = scale_data(S.data, S.tower().root(0, 1) + Elem::one());
    GroupSpec N = make_group_spec(d, Variant::Standard);
    REQUIRE_FALSE(N.derived.one_in_Vp);
    REQUIRE_FALSE(N.derived.one_in_V);
    Rng rng(10);
    CHECK_THROWS_AS(check_levi_containment(N, 2, rng), PreconditionNotNormalized);
}

TEST_CASE("conjugation by h(lambda) with lambda = 1 changes nothing") {
    GroupSpec S = build_spec(demo_rank1());
    GroupSpec C = conjugate_by_h_lambda(S, Elem::one());
    CHECK(C.data.Vp.contains(Elem::one()));
    CHECK(C.data.V2.contains(S.tower().root(0, 1)));
    CHECK(h_lambda(1, Elem::one()).is_identity());
}
