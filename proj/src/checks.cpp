#include "bcn/checks.hpp"

#include <map>
#include <set>

namespace bcn {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::size_t matrix_hash(const QMatrix& M) {
    std::size_t h = 0;
    for (int i = 0; i < M.size(); ++i)
        for (int j = 0; j < M.size(); ++j) h = h * 1000003u ^ M.at(i, j).hash();
    return h;
}

Elem ipow(const Elem& x, int e) {
    Elem b = e < 0 ? x.inv() : x;
    Elem r = Elem::one();
    for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
    return r;
}

QMatrix random_cartan(const GroupSpec& spec, Rng& rng) {
    QMatrix M = QMatrix::identity_q(spec.rank());
    for (int i = 1; i <= spec.rank(); ++i) M = M * atom_matrix(spec, Atom::cartan(i, spec.random_cartan_coeff(i, rng)));
    return M;
}

// torus part times a random selection of positive root elements
QMatrix random_borel(const GroupSpec& spec, Rng& rng, bool force_unipotent) {
    QMatrix M = random_cartan(spec, rng);
    bool any = false;
    auto roots = positive_roots_in_order(spec.rank());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        bool take = rng() % 2 || (force_unipotent && !any && k + 1 == roots.size());
        if (!take) continue;
        M = M * root_element(roots[k], spec.random_root_coeff(roots[k], rng));
        any = true;
    }
    return M;
}

QMatrix random_monomial(const GroupSpec& spec, Rng& rng) {
    int n = spec.rank();
    QMatrix M = random_cartan(spec, rng);
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(2 * n + 1));
    for (int k = 0; k < len; ++k)
        M = M * atom_matrix(spec, Atom::reflection(1 + static_cast<int>(rng() % static_cast<unsigned>(n)), rng() % 2));
    return M;
}

WeylElement random_weyl(int n, Rng& rng) {
    std::vector<int> word;
    int len = static_cast<int>(rng() % static_cast<unsigned>(n * n + 1));
    for (int k = 0; k < len; ++k) word.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
    return WeylElement::from_word(n, word);
}

bool all_zero(const std::vector<std::pair<Root, Elem>>& xs) {
    for (const auto& [a, c] : xs)
        if (!c.is_zero()) return false;
    return true;
}

// g lies in B: Bruhat cell of the identity
bool in_borel(const GroupSpec& spec, const QMatrix& g) { return decompose(spec, g).w.is_identity(); }

// g lies in C(k)
bool in_cartan(const GroupSpec& spec, const QMatrix& g) {
    NormalForm nf = decompose(spec, g);
    return nf.w.is_identity() && nf.u_w.empty() && all_zero(nf.u) && spec.cartan_member(nf.h) == Tri::Yes;
}

Elem random_k(const Tower& T, Rng& rng) {
    for (;;) {
        Elem x = T.random_scalar(rng, 0);
        if (!x.is_zero()) return x;
    }
}

std::string describe(const Tower& T, const QMatrix& M) { return "\n" + M.to_string(T); }

}  // namespace

void CheckReport::expect(bool passed, const std::string& what, const std::function<std::string()>& detail) {
    ++checks;
    if (passed) return;
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(detail ? what + ": " + detail() : what);
}

void CheckReport::merge(const CheckReport& o) {
    checks += o.checks;
    failures += o.failures;
    for (const auto& c : o.counterexamples)
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(o.suite + ": " + c);
    for (const auto& x : o.notes) notes.push_back(o.suite + ": " + x);
}

// ---- round trip and uniqueness ------------------------------------------------

CheckReport check_round_trip(const GroupSpec& spec, int words, int atoms, Rng& rng) {
    CheckReport r;
    r.suite = "round-trip";
    const Tower& T = spec.tower();
    std::vector<std::pair<NormalForm, QMatrix>> seen;
    for (int k = 0; k < words; ++k) {
        GroupWord w = random_word(spec, atoms, rng);
        QMatrix g = evaluate(spec, w);
        Membership m = membership(spec, g);
        r.expect(m.yes(), "membership of an evaluated word",
                 [&] { return verdict_name(m.verdict) + " (" + m.reason + ")" + describe(T, g); });
        if (!m.normal_form) continue;
        NormalForm nf = *m.normal_form;
        QMatrix back = evaluate(spec, nf);
        bool same = back == g;
        r.expect(same, "evaluate(normal form) == g", [&] { return nf.to_string(T) + describe(T, g); });
        // decompose is a function of the matrix, so once back == g stability only
        // needs an actual recomputation on a few words
        if (!same || k < 10)
            r.expect(decompose(spec, back) == nf, "normal form is stable", [&] { return nf.to_string(T); });
        seen.emplace_back(std::move(nf), std::move(g));
    }
    // distinct normal forms must give distinct matrices
    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < seen.size(); ++i) buckets[matrix_hash(seen[i].second)].push_back(i);
    std::size_t pairs = 0, clashes = 0;
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) {
            if (seen[i].first == seen[j].first) continue;
            ++pairs;
            if (seen[i].second == seen[j].second) ++clashes;
        }
    r.expect(clashes == 0, "distinct normal forms give distinct matrices",
             [&] { return std::to_string(clashes) + " of " + std::to_string(pairs) + " pairs collide"; });
    r.notes.push_back(std::to_string(pairs) + " pairs of distinct normal forms compared");
    return r;
}

// ---- product map over positive root groups ---------------------------------------

CheckReport check_mu_injectivity(const GroupSpec& spec, int samples, Rng& rng) {
    CheckReport r;
    r.suite = "mu";
    const Tower& T = spec.tower();
    const int n = spec.rank();
    auto roots = positive_roots_in_order(n);

    auto product = [&](const std::vector<Elem>& cs) {
        QMatrix M = QMatrix::identity_q(n);
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (!cs[k].is_zero()) M = M * root_element(roots[k], cs[k]);
        return M;
    };

    std::set<std::vector<Elem>> tuples;
    std::map<std::size_t, std::vector<std::pair<std::vector<Elem>, QMatrix>>> images;
    int drawn = 0;
    for (int guard = 0; drawn < samples && guard < 20 * samples; ++guard) {
        std::vector<Elem> cs;
        for (const Root& a : roots) cs.push_back(rng() % 4 ? spec.random_root_coeff(a, rng) : Elem());
        if (!tuples.insert(cs).second) continue;
        ++drawn;
        QMatrix M = product(cs);
        auto& bucket = images[matrix_hash(M)];
        bool clash = false;
        for (const auto& [other, N] : bucket)
            if (N == M) clash = true;
        r.expect(!clash, "distinct tuples give distinct products", [&] { return describe(T, M); });
        bucket.emplace_back(std::move(cs), std::move(M));
    }
    r.notes.push_back(std::to_string(drawn) + " distinct tuples");

    // c^2 + c' determines (c, c')
    const Root b = Root::eps(n, n), b2 = 2 * b;
    for (int k = 0; k < samples; ++k) {
        Elem c = rng() % 8 ? spec.derived.V.random(rng) : Elem();
        Elem cp = rng() % 8 ? spec.data.Vp.random(rng) : Elem();
        auto split = split_v0(spec.data, c.sq() + cp);
        bool ok = split && split->first == c.sq() && split->second == cp && T.sqrt(split->first) == c;
        r.expect(ok, "c^2 + c' splits back into (c, c')", [&] { return "c = " + T.to_string(c) + ", c' = " + T.to_string(cp); });
    }

    // near collision: same c^2 + c' with c != d, so c' leaves V'
    for (int k = 0; k < samples; ++k) {
        Elem c = spec.derived.V.random(rng), d = spec.derived.V.random(rng);
        if (c == d) continue;
        Elem dp = spec.data.Vp.random(rng);
        Elem cp = d.sq() + dp + c.sq();
        QMatrix A = root_element(b, c) * root_element(b2, cp);
        QMatrix B = root_element(b, d) * root_element(b2, dp);
        r.expect(A.translation() != B.translation(), "near collision differs in the translation part",
                 [&] { return "c = " + T.to_string(c) + ", d = " + T.to_string(d); });
        r.expect(!spec.data.Vp.contains(cp), "near-collision coefficient lies outside V'",
                 [&] { return T.to_string(cp); });
    }
    return r;
}

// ---- BN-pair axioms -----------------------------------------------------------

CheckReport check_bn_axioms(const GroupSpec& spec, int samples, Rng& rng) {
    CheckReport r;
    r.suite = "bn";
    const Tower& T = spec.tower();
    const int n = spec.rank();

    for (int k = 0; k < samples; ++k) {
        // BN2: C = B ∩ N is normal in N
        QMatrix m = random_monomial(spec, rng), c = random_cartan(spec, rng);
        QMatrix conj = m * c * m.inverse();
        r.expect(in_cartan(spec, conj), "BN2: n c n^-1 lies in C", [&] { return describe(T, conj); });

        // BN4: s_i B s_w ⊆ B s_i s_w B ∪ B s_w B
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        WeylElement w = random_weyl(n, rng);
        QMatrix g = simple_rep(spec, i) * random_borel(spec, rng, false) * weyl_rep(spec, w);
        WeylElement got = decompose(spec, g).w;
        WeylElement siw = WeylElement::simple(n, i) * w;
        r.expect(got == siw || got == w, "BN4: cell of s_i b s_w",
                 [&] { return "i = " + std::to_string(i) + ", w = " + w.to_string() + ", got " + got.to_string(); });

        // BN5: s_i B s_i is not inside B
        const Root a = simple_roots(n)[static_cast<std::size_t>(i - 1)];
        QMatrix s = simple_rep(spec, i);
        QMatrix x = root_element(a, spec.random_root_coeff(a, rng));
        r.expect(!in_borel(spec, s * x * s.inverse()), "BN5: s_i x_(a_i)(c) s_i^-1 is not in B",
                 [&] { return "i = " + std::to_string(i); });

        // saturation: C lies in every s_w B s_w^-1, a non-toral b leaves one of them
        QMatrix h = random_cartan(spec, rng);
        WeylElement v = random_weyl(n, rng);
        QMatrix sv = weyl_rep(spec, v);
        r.expect(in_borel(spec, sv.inverse() * h * sv), "saturation: C ⊆ s_w B s_w^-1",
                 [&] { return "w = " + v.to_string(); });
        QMatrix bu = random_borel(spec, rng, true);
        QMatrix s0 = weyl_rep(spec, WeylElement::longest(n));
        r.expect(!in_borel(spec, s0.inverse() * bu * s0), "saturation: b outside C leaves s_w0 B s_w0^-1",
                 [&] { return describe(T, bu); });

        // pi(g) = 1 => g = 1
        QMatrix gw = evaluate(spec, random_word(spec, 8, rng));
        if (gw.pi().is_identity()) r.expect(gw.is_identity(), "pi(g) = 1 => g = 1", [&] { return describe(T, gw); });
        Elem cv = spec.derived.V.random(rng);
        const Root vs = Root::eps(n, 1 + static_cast<int>(rng() % static_cast<unsigned>(n)), rng() % 2 ? 1 : -1);
        QMatrix kern = root_element(vs, cv) * root_element(2 * vs, cv.sq());
        r.expect(kern.pi().is_identity() && !kern.is_identity(), "y_b(c) x_2b(c^2) lies in ker pi");
        r.expect(!membership(spec, kern).yes(), "nontrivial element of ker pi is not in G",
                 [&] { return describe(T, kern); });
    }
    return r;
}

// ---- Levi containment ------------------------------------------------------------

CheckReport check_levi_containment(const GroupSpec& spec, int samples, Rng& rng) {
    CheckReport r;
    r.suite = "levi";
    const Tower& T = spec.tower();
    const int n = spec.rank();
    const bool l_ok = spec.derived.one_in_Vp;
    const bool m_ok = spec.derived.one_in_V && (spec.variant != Variant::Rank2 || spec.derived.one_in_Vpp);
    if (!l_ok && !m_ok) throw PreconditionNotNormalized("neither 1 ∈ V′ nor 1 ∈ V; normalize the data first");
    if (spec.variant == Variant::Rank2 && l_ok && !spec.derived.one_in_Vpp)
        throw PreconditionNotNormalized("the rank-2 Levi check needs 1 ∈ V″");

    auto member = [&](const std::string& what, const QMatrix& g) {
        Membership m = membership(spec, g);
        r.expect(m.yes(), what, [&] { return verdict_name(m.verdict) + " (" + m.reason + ")" + describe(T, g); });
    };
    auto run = [&](bool very_short_family) {
        for (const Root& a : all_roots(n)) {
            RootLength len = length_of(a);
            bool wanted = very_short_family ? len != RootLength::Long : len != RootLength::VeryShort;
            if (!wanted) continue;
            member("x_" + a.to_string() + "(1)", root_element(a, Elem::one()));
            for (int k = 0; k < samples; ++k) {
                Elem c = random_k(T, rng);
                member("x_" + a.to_string() + "(" + T.to_string(c) + ")", root_element(a, c));
            }
        }
        for (const Root& a : simple_roots(n)) {
            Root b = (!very_short_family && length_of(a) == RootLength::VeryShort) ? 2 * a : a;
            member("s_" + b.to_string() + "(1)", s_elem(b, Elem::one()));
        }
    };
    if (l_ok) run(false);
    else r.notes.push_back("Sp_2n generators skipped: 1 ∉ V′");
    if (m_ok) run(true);
    else r.notes.push_back("SO_(2n+1) generators skipped: 1 ∉ V");
    return r;
}

// ---- conjugation by h(lambda) ------------------------------------------------------

CheckReport check_conjugation(const GroupSpec& spec, int lambdas, Rng& rng) {
    CheckReport r;
    r.suite = "conj";
    const Tower& T = spec.tower();
    const int n = spec.rank();
    const bool rank2 = spec.variant == Variant::Rank2;

    for (int k = 0; k < lambdas; ++k) {
        Elem lambda = rank2 ? spec.derived.K0.random(rng) : spec.derived.E.random(rng);
        GroupSpec conj = conjugate_by_h_lambda(spec, lambda);
        QMatrix H = h_lambda(n, lambda), Hi = h_lambda(n, lambda.inv());
        for (const auto& [name, g] : sample_generators(spec, rng, 1)) {
            QMatrix cg = H * g * Hi;
            Membership m = membership(conj, cg);
            r.expect(m.yes(), "conjugated generator " + name + " is a member", [&] {
                return "lambda = " + T.to_string(lambda) + ": " + verdict_name(m.verdict) + " (" + m.reason + ")";
            });
        }
        for (int i = 1; i <= n; ++i) {
            Root a = 2 * Root::eps(n, i);
            Elem u = spec.data.Vp.random(rng);
            r.expect(H * root_element(a, u) * Hi == root_element(a, lambda.sq() * u),
                     "h(lambda) x_2a(u) h(lambda)^-1 = x_2a(lambda^2 u)");
        }
    }

    // lambda = sqrt(v), v in V'
    Elem v = spec.data.Vp.random(rng);
    auto lambda = T.try_sqrt(v);
    if (!lambda) {
        r.notes.push_back("sqrt(" + T.to_string(v) + ") is not in the tower; enlarge it to run the normalization check");
    } else if (rank2 && !spec.derived.K0.contains(v)) {
        r.notes.push_back("v ∉ K0, so h(sqrt v) does not preserve the rank-2 variant");
    } else {
        GroupSpec conj = conjugate_by_h_lambda(spec, *lambda);
        r.expect(conj.data.Vp.contains(Elem::one()), "1 lies in v V′", [&] { return "v = " + T.to_string(v); });
    }
    return r;
}

// ---- Cartan action on root groups -----------------------------------------------------

CheckReport check_constraint_stability(const GroupSpec& spec, int samples, Rng& rng) {
    CheckReport r;
    r.suite = "stability";
    const Tower& T = spec.tower();
    const int n = spec.rank();
    auto simple = simple_roots(n);
    for (int k = 0; k < samples; ++k)
        for (int i = 1; i <= n; ++i) {
            // the Cartan generator for index i is h_a with a = a_i (i < n) or 2 a_n
            Root a = i < n ? simple[static_cast<std::size_t>(i - 1)] : 2 * simple[static_cast<std::size_t>(n - 1)];
            Elem u = spec.random_cartan_coeff(i, rng);
            QMatrix h = atom_matrix(spec, Atom::cartan(i, u));
            for (const Root& b : all_roots(n)) {
                Elem c = spec.random_root_coeff(b, rng);
                Elem c2 = ipow(u, pairing(b, a)) * c;
                r.expect(h * root_element(b, c) * h.inverse() == root_element(b, c2),
                         "h_a(u) x_b(c) h_a(u)^-1 = x_b(u^<b,a> c)", [&] { return "a = " + a.to_string() + ", b = " + b.to_string(); });
                r.expect(spec.in_root_domain(b, c2), "u^<b,a> c stays in the domain of b",
                         [&] { return "b = " + b.to_string() + ", coefficient " + T.to_string(c2); });
            }
        }
    return r;
}

// ---- perfectness of the rank-2 variant ------------------------------------------------

CheckReport check_perfectness_witnesses(const GroupSpec& spec, int samples, Rng& rng) {
    CheckReport r;
    r.suite = "perfectness";
    if (spec.variant != Variant::Rank2) {
        r.notes.push_back("only defined for the rank-2 variant");
        return r;
    }
    const Tower& T = spec.tower();
    const Root a1 = simple_roots(2)[0], a2 = simple_roots(2)[1], la2 = 2 * a2;
    const Elem& v1 = spec.v1;
    const Elem& v2 = spec.v2;
    const Elem one = Elem::one();
    std::size_t literal_2 = 0, literal_3 = 0, tried = 0;
    for (int k = 0; k < samples; ++k) {
        // [h_2a2(c/v2), x_a1(t)] = x_a1((v2/c + 1) t), c in V0
        Elem c = spec.derived.V0.random(rng), t = spec.random_root_coeff(a1, rng);
        QMatrix h = h_elem(la2, c / v2);
        r.expect(commutator(h, root_element(a1, t)) == root_element(a1, (v2 / c + one) * t),
                 "[h_2a2(c/v2), x_a1(t)] = x_a1((v2/c + 1) t)", [&] { return "c = " + T.to_string(c); });

        // h_a1(c/v1) for c in V''
        Elem d = spec.data.Vpp->random(rng);
        QMatrix g = h_elem(a1, d / v1);
        Elem tl = spec.random_root_coeff(la2, rng), tv = spec.random_root_coeff(a2, rng);
        QMatrix lhs2 = commutator(g, root_element(la2, tl));
        QMatrix lhs3 = commutator(g, root_element(a2, tv));
        r.expect(lhs2 == root_element(la2, ((v1 / d).sq() + one) * tl), "[h_a1(c/v1), x_2a2(t)] = x_2a2((v1^2/c^2 + 1) t)",
                 [&] { return "c = " + T.to_string(d); });
        r.expect(lhs3 == root_element(a2, (v1 / d + one) * tv), "[h_a1(c/v1), y_a2(t)] = y_a2((v1/c + 1) t)",
                 [&] { return "c = " + T.to_string(d); });
        ++tried;
        if (lhs2 == root_element(la2, ((d / v1).sq() + one) * tl)) ++literal_2;
        if (lhs3 == root_element(a2, (d / v1 + one) * tv)) ++literal_3;

        // the representatives
        QMatrix s1 = simple_rep(spec, 1), s2 = simple_rep(spec, 2);
        Elem u = spec.random_root_coeff(a1, rng), w = spec.random_root_coeff(la2, rng);
        r.expect(commutator(s1, root_element(a1, u)) == root_element(-a1, v1.sq().inv() * u) * root_element(a1, u),
                 "[s1, x_a1(t)] = x_-a1(t/v1^2) x_a1(t)");
        r.expect(commutator(s2, root_element(la2, w)) == root_element(-la2, v2.sq().inv() * w) * root_element(la2, w),
                 "[s2, x_2a2(t)] = x_-2a2(t/v2^2) x_2a2(t)");
    }
    r.notes.push_back("with the ratio c/v1 instead of v1/c the second identity held on " + std::to_string(literal_2) +
                      " of " + std::to_string(tried) + " samples and the third on " + std::to_string(literal_3));
    return r;
}

}  // namespace bcn
