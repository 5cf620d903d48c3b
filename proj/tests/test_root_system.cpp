#include "doctest.h"

#include <algorithm>
#include <set>

#include "bcn/roots.hpp"

using namespace bcn;

namespace {

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

}  // namespace

TEST_CASE("root counts and lengths of BC_n") {
    for (int n = 1; n <= 4; ++n) {
        auto roots = all_roots(n);
        std::size_t vs = 0, sh = 0, lg = 0;
        for (const Root& a : roots) {
            switch (length_of(a)) {
                case RootLength::VeryShort: ++vs; break;
                case RootLength::Short: ++sh; break;
                case RootLength::Long: ++lg; break;
            }
        }
        CHECK(vs == static_cast<std::size_t>(2 * n));
        CHECK(lg == static_cast<std::size_t>(2 * n));
        CHECK(sh == static_cast<std::size_t>(2 * n * (n - 1)));
        CHECK(positive_roots_in_order(n).size() == roots.size() / 2);
        CHECK(simple_roots(n).size() == static_cast<std::size_t>(n));
    }
    CHECK_THROWS_AS(length_of(Root{{3, 0}}), UnknownRoot);
}

TEST_CASE("positive roots come in the fixed order") {
    auto p = positive_roots_in_order(2);
    // very short roots in height order, each followed by its double, then short roots
    REQUIRE(p.size() == 6);
    CHECK(p[0] == Root{{0, 1}});
    CHECK(p[1] == Root{{0, 2}});
    CHECK(p[2] == Root{{1, 0}});
    CHECK(p[3] == Root{{2, 0}});
    CHECK(length_of(p[4]) == RootLength::Short);
    CHECK(length_of(p[5]) == RootLength::Short);
    CHECK(height(p[4]) <= height(p[5]));
    for (const Root& a : p) CHECK(is_positive(a));
}

TEST_CASE("pairings are integral and <a, a> = 2") {
    for (int n = 1; n <= 3; ++n)
        for (const Root& a : all_roots(n)) {
            CHECK(pairing(a, a) == 2);
            for (const Root& b : all_roots(n)) {
                int p = pairing(b, a);
                CHECK(p >= -4);
                CHECK(p <= 4);
                // reflection of b in a is again a root
                Root r = b + (-p) * a;
                CHECK(is_root(r));
            }
        }
}

TEST_CASE("Weyl group has order 2^n n! and acts on the roots") {
    for (int n = 1; n <= 4; ++n) {
        auto W = weyl_group(n);
        CHECK(W.size() == (std::size_t{1} << n) * factorial(n));
        std::set<WeylElement> distinct(W.begin(), W.end());
        CHECK(distinct.size() == W.size());
        auto roots = all_roots(n);
        std::set<Root> rs(roots.begin(), roots.end());
        for (const WeylElement& w : W) {
            for (const Root& a : roots) CHECK(rs.count(w.act(a)) == 1);
            CHECK((w * w.inverse()).is_identity());
        }
    }
}

TEST_CASE("reduced words have length equal to the inversion count") {
    for (int n = 1; n <= 4; ++n)
        for (const WeylElement& w : weyl_group(n)) {
            auto word = w.reduced_word();
            CHECK(static_cast<int>(word.size()) == w.length());
            CHECK(WeylElement::from_word(n, word) == w);
            CHECK(static_cast<int>(inversion_set_reduced(w).size()) == w.length());
            // a very short root and its double are inverted together
            auto inv = inversion_set(w);
            for (const Root& a : inv)
                if (length_of(a) == RootLength::VeryShort)
                    CHECK(std::find(inv.begin(), inv.end(), 2 * a) != inv.end());
        }
}

TEST_CASE("longest element sends every positive root to a negative one") {
    for (int n = 1; n <= 4; ++n) {
        WeylElement w0 = WeylElement::longest(n);
        CHECK(w0.length() == n * n);
        for (const Root& a : positive_roots_in_order(n)) CHECK_FALSE(is_positive(w0.act(a)));
    }
}

TEST_CASE("simple reflections are involutions satisfying the braid relations") {
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i <= n; ++i) CHECK((WeylElement::simple(n, i) * WeylElement::simple(n, i)).is_identity());
        for (int i = 1; i < n; ++i) {
            WeylElement a = WeylElement::simple(n, i), b = WeylElement::simple(n, i + 1);
            int m = (i + 1 == n) ? 4 : 3;
            WeylElement p = WeylElement::identity(n);
            for (int k = 0; k < m; ++k) p = p * a * b;
            CHECK(p.is_identity());
        }
    }
    CHECK_THROWS_AS(WeylElement::signed_permutation({0, 0}, {1, 1}), std::invalid_argument);
}
