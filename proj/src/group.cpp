#include "bcn/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bcn {

Variant parse_variant(const std::string& s) {
    if (s == "standard") return Variant::Standard;
    if (s == "derived") return Variant::Derived;
    if (s == "rank2") return Variant::Rank2;
    throw std::invalid_argument("unknown variant '" + s + "' (expected standard, derived or rank2)");
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::Derived: return "derived";
        case Variant::Rank2: return "rank2";
    }
    return "?";
}

// ---- ratio groups -------------------------------------------------------------

namespace {

bool is_single_ratio(const Subspace& W, const Elem& c) { return meets_scaled(W, c); }

Tri combine(Tri a, Tri b) {
    if (a == Tri::No || b == Tri::No) return Tri::No;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::Yes;
}

}  // namespace

Tri in_ratio_group(const Subspace& W, const Subfield& ambient, const Elem& c, int bound) {
    if (c.is_zero() || W.is_zero()) return Tri::No;
    if (!ambient.contains(c)) return Tri::No;
    if (is_single_ratio(W, c)) return Tri::Yes;
    if (bound <= 1) return Tri::Unknown;

    const auto& span = W.level_span();
    std::vector<Elem> pool;
    std::set<Elem> seen;
    auto add = [&](const Elem& x) {
        if (!x.is_zero() && !x.is_one() && seen.insert(x).second) pool.push_back(x);
    };
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = 0; j < span.size(); ++j)
            if (i != j) add(span[i] / span[j]);
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i + 1; j < span.size(); ++j)
            for (std::size_t k = 0; k < span.size(); ++k) add((span[i] + span[j]) / span[k]);
    if (pool.size() > 48) pool.resize(48);

    constexpr std::size_t kLayerCap = 256;
    std::vector<Elem> layer{Elem::one()};
    for (int depth = 2; depth <= bound; ++depth) {
        std::vector<Elem> next;
        std::set<Elem> nseen;
        for (const Elem& g : layer)
            for (const Elem& p : pool) {
                for (const Elem& q : {g * p, g / p}) {
                    if (next.size() >= kLayerCap || !nseen.insert(q).second) continue;
                    next.push_back(q);
                    if (is_single_ratio(W, c / q)) return Tri::Yes;
                }
            }
        layer = std::move(next);
    }
    return Tri::Unknown;
}

// ---- GroupSpec ----------------------------------------------------------------

bool GroupSpec::in_root_domain(const Root& a, const Elem& c) const {
    if (c.is_zero()) return true;
    switch (length_of(a)) {
        case RootLength::VeryShort: return derived.V.contains(c);
        case RootLength::Long: return data.Vp.contains(c);
        case RootLength::Short:
            return variant == Variant::Rank2 ? data.Vpp->contains(c) : data.K.contains(c);
    }
    return false;
}

Elem GroupSpec::random_root_coeff(const Root& a, Rng& rng) const {
    switch (length_of(a)) {
        case RootLength::VeryShort: return derived.V.random(rng);
        case RootLength::Long: return data.Vp.random(rng);
        case RootLength::Short: return variant == Variant::Rank2 ? data.Vpp->random(rng) : data.K.random(rng);
    }
    return Elem::one();
}

Elem GroupSpec::random_outside_root_domain(const Root& a, Rng& rng) const {
    const Tower& T = tower();
    switch (length_of(a)) {
        case RootLength::VeryShort: {
            for (int i = 0; i < 256; ++i) {
                Elem x = derived.E.random(rng);
                if (!derived.V.contains(x)) return x;
            }
            break;
        }
        case RootLength::Long: return data.Vp.random_outside(rng, data.K.as_subspace());
        case RootLength::Short:
            if (variant == Variant::Rank2) return data.Vpp->random_outside(rng, data.K.as_subspace());
            for (int i = 0; i < 256; ++i) {
                Elem x = T.random_element(rng);
                if (!data.K.contains(x)) return x;
            }
            break;
    }
    throw std::invalid_argument("root domain fills the ambient field");
}

Tri GroupSpec::cartan_member(const std::vector<Elem>& c) const {
    if (static_cast<int>(c.size()) != rank()) return Tri::No;
    for (const Elem& x : c)
        if (x.is_zero() || !data.K.contains(x)) return Tri::No;
    switch (variant) {
        case Variant::Standard: return Tri::Yes;
        case Variant::Derived: {
            Elem p = Elem::one();
            for (const Elem& x : c) p *= x;
            return in_ratio_group(derived.V0, derived.K0, p, cartan_search_bound);
        }
        case Variant::Rank2: {
            Tri a = in_ratio_group(*data.Vpp, data.K, c[0], cartan_search_bound);
            if (a == Tri::No) return a;
            return combine(a, in_ratio_group(derived.V0, derived.K0, c[0] * c[1], cartan_search_bound));
        }
    }
    return Tri::No;
}

namespace {

Elem random_ratio(const Subspace& W, Rng& rng) { return W.random(rng) / W.random(rng); }

}  // namespace

Elem GroupSpec::random_cartan_coeff(int i, Rng& rng) const {
    int n = rank();
    switch (variant) {
        case Variant::Standard: return data.K.random(rng);
        case Variant::Derived: return i < n ? data.K.random(rng) : random_ratio(derived.V0, rng);
        case Variant::Rank2: return i == 1 ? random_ratio(*data.Vpp, rng) : random_ratio(derived.V0, rng);
    }
    return Elem::one();
}

bool GroupSpec::cartan_atom_ok(int i, const Elem& c) const {
    int n = rank();
    if (i < 1 || i > n || c.is_zero() || !data.K.contains(c)) return false;
    switch (variant) {
        case Variant::Standard: return true;
        case Variant::Derived:
            return i < n || in_ratio_group(derived.V0, derived.K0, c, cartan_search_bound) == Tri::Yes;
        case Variant::Rank2:
            if (i == 1) return in_ratio_group(*data.Vpp, data.K, c, cartan_search_bound) == Tri::Yes;
            return in_ratio_group(derived.V0, derived.K0, c, cartan_search_bound) == Tri::Yes;
    }
    return false;
}

GroupSpec make_group_spec(BCData data, Variant variant, std::optional<Elem> v1, std::optional<Elem> v2,
                          int cartan_search_bound) {
    ValidationReport rep = validate(data);
    if (!rep.ok()) {
        std::string msg = "invalid data:";
        for (const auto& v : rep.violations) msg += " [" + v.name + "]";
        throw InvalidData(msg);
    }
    GroupSpec s;
    s.derived = derive(data);
    s.data = std::move(data);
    s.variant = variant;
    s.cartan_search_bound = cartan_search_bound;
    const auto& d = s.data;
    if (variant == Variant::Rank2) {
        if (d.rank != 2 || !d.Vpp) throw InvalidData("the rank-2 variant needs n = 2 and V″");
        Elem a = v1 ? *v1 : (d.Vpp->contains(Elem::one()) ? Elem::one() : d.Vpp->level_span().front());
        if (a.is_zero() || !d.Vpp->contains(a)) throw InvalidData("v1 must be a nonzero element of V″");
        s.v1 = a;
    }
    if (variant != Variant::Standard) {
        Elem b = v2 ? *v2 : (d.Vp.contains(Elem::one()) ? Elem::one() : d.Vp.level_span().front());
        if (b.is_zero() || !d.Vp.contains(b)) throw InvalidData("v2 must be a nonzero element of V′");
        if (variant == Variant::Rank2 && !s.derived.K0.contains(b))
            throw InvalidData("v2 must lie in K₀ so that every short root group has coefficients in V″");
        s.v2 = b;
    }
    return s;
}

// ---- words ----------------------------------------------------------------------

std::string Atom::to_string(const Tower& T) const {
    switch (kind) {
        case Kind::Root: return "x" + root.to_string() + "(" + T.to_string(coeff) + ")";
        case Kind::Cartan: return "h" + std::to_string(index) + "(" + T.to_string(coeff) + ")";
        case Kind::Reflection: return "s" + std::to_string(index) + (inverse ? "^-1" : "");
    }
    return "?";
}

QMatrix simple_rep(const GroupSpec& spec, int i) {
    int n = spec.rank();
    if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
    switch (spec.variant) {
        case Variant::Standard: return simple_reflection(n, i);
        case Variant::Derived:
            return i < n ? simple_reflection(n, i) : s_elem(2 * Root::eps(n, n), spec.v2);
        case Variant::Rank2:
            return i == 1 ? s_elem(simple_roots(2)[0], spec.v1) : s_elem(2 * Root::eps(2, 2), spec.v2);
    }
    return {};
}

QMatrix weyl_rep(const GroupSpec& spec, const WeylElement& w) {
    QMatrix M = QMatrix::identity_q(spec.rank());
    for (int i : w.reduced_word()) M = M * simple_rep(spec, i);
    return M;
}

namespace {

QMatrix cartan_matrix(int n, int i, const Elem& c) {
    std::vector<Elem> d(n, Elem::one());
    d[i - 1] = c;
    if (i < n) d[i] = c.inv();
    return torus(d);
}

}  // namespace

QMatrix atom_matrix(const GroupSpec& spec, const Atom& atom) {
    int n = spec.rank();
    switch (atom.kind) {
        case Atom::Kind::Root:
            if (atom.root.rank() != n) throw ConstraintViolation("root of wrong rank");
            if (!spec.in_root_domain(atom.root, atom.coeff))
                throw ConstraintViolation("coefficient outside the root domain: " + atom.to_string(spec.tower()));
            return root_element(atom.root, atom.coeff);
        case Atom::Kind::Cartan:
            if (!spec.cartan_atom_ok(atom.index, atom.coeff))
                throw ConstraintViolation("coefficient outside the Cartan subgroup: " + atom.to_string(spec.tower()));
            return cartan_matrix(n, atom.index, atom.coeff);
        case Atom::Kind::Reflection: {
            QMatrix s = simple_rep(spec, atom.index);
            return atom.inverse ? s.inverse() : s;
        }
    }
    return {};
}

QMatrix evaluate(const GroupSpec& spec, const GroupWord& word) {
    QMatrix M = QMatrix::identity_q(spec.rank());
    for (std::size_t k = 0; k < word.size(); ++k) {
        try {
            M = M * atom_matrix(spec, word[k]);
        } catch (const ConstraintViolation& e) {
            throw ConstraintViolation("atom " + std::to_string(k) + ": " + e.what());
        }
    }
    return M;
}

GroupWord random_word(const GroupSpec& spec, int atoms, Rng& rng) {
    int n = spec.rank();
    auto roots = all_roots(n);
    GroupWord w;
    for (int k = 0; k < atoms; ++k) {
        unsigned r = static_cast<unsigned>(rng() % 20);
        if (r < 12) {
            const Root& a = roots[rng() % roots.size()];
            w.push_back(Atom::root_elem(a, spec.random_root_coeff(a, rng)));
        } else if (r < 15) {
            int i = 1 + static_cast<int>(rng() % n);
            w.push_back(Atom::cartan(i, spec.random_cartan_coeff(i, rng)));
        } else {
            w.push_back(Atom::reflection(1 + static_cast<int>(rng() % n), rng() % 2));
        }
    }
    return w;
}

// ---- normal form -------------------------------------------------------------

std::string NormalForm::to_string(const Tower& T) const {
    std::ostringstream os;
    auto list = [&](const std::vector<std::pair<Root, Elem>>& xs) {
        os << "[";
        bool first = true;
        for (const auto& [a, c] : xs) {
            if (c.is_zero()) continue;
            os << (first ? "" : ", ") << "x" << a.to_string() << "(" << T.to_string(c) << ")";
            first = false;
        }
        os << "]";
    };
    os << "u_w = ";
    list(u_w);
    os << "\nw = " << w.to_string() << " word=[";
    auto word = w.reduced_word();
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    os << "]\nh = (";
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << T.to_string(h[i]);
    os << ")\nu = ";
    list(u);
    return os.str();
}

namespace {

QMatrix product_in_order(int n, const std::vector<std::pair<Root, Elem>>& xs) {
    QMatrix M = QMatrix::identity_q(n);
    for (const auto& [a, c] : xs)
        if (!c.is_zero()) M = M * root_element(a, c);
    return M;
}

std::pair<int, int> read_position(int n, const Root& a) {
    std::vector<std::pair<int, int>> nz;
    for (int i = 0; i < n; ++i)
        if (a.c[i]) nz.push_back({i + 1, a.c[i] > 0 ? 1 : -1});
    auto [i, si] = nz[0];
    switch (length_of(a)) {
        case RootLength::VeryShort: return {2 * n, weight_index(n, i, -si)};
        case RootLength::Long: return {weight_index(n, i, si), weight_index(n, i, -si)};
        case RootLength::Short: return {weight_index(n, i, si), weight_index(n, nz[1].first, -nz[1].second)};
    }
    return {0, 0};
}

/// Coefficients c_r with M = prod_r x_r(c_r) in the given order; nullopt if
/// M is not such a product.
std::optional<std::vector<std::pair<Root, Elem>>> peel(int n, const QMatrix& M, const std::vector<Root>& order) {
    std::vector<std::pair<Root, Elem>> out;
    for (const Root& a : order) out.push_back({a, Elem::zero()});
    std::vector<int> heights;
    for (const Root& a : order) heights.push_back(height(a));
    std::vector<int> hs = heights;
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    for (int h : hs) {
        std::vector<std::pair<Root, Elem>> lower;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (heights[k] < h) lower.push_back(out[k]);
        QMatrix P = product_in_order(n, lower);
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (heights[k] != h) continue;
            auto [p, q] = read_position(n, order[k]);
            out[k].second = M.at(p, q) + P.at(p, q);
        }
    }
    if (!(product_in_order(n, out) == M)) return std::nullopt;
    return out;
}

}  // namespace

QMatrix evaluate(const GroupSpec& spec, const NormalForm& nf) {
    int n = spec.rank();
    return product_in_order(n, nf.u_w) * weyl_rep(spec, nf.w) * torus(nf.h) * product_in_order(n, nf.u);
}

NormalForm decompose(const GroupSpec& spec, const QMatrix& g) {
    int n = spec.rank(), m = 2 * n;
    if (g.size() != m + 1 || !g.is_q_shaped())
        throw NotInBigGroup("matrix is not of the block form [[g,0],[v,1]] with g symplectic");

    // Basis order e_1..e_n, f_n..f_1 makes the positive Borel upper triangular.
    std::vector<int> order(m);
    for (int i = 0; i < n; ++i) {
        order[i] = i;
        order[n + i] = 2 * n - 1 - i;
    }
    std::vector<std::vector<Elem>> A(m, std::vector<Elem>(m)), Linv(m, std::vector<Elem>(m));
    for (int r = 0; r < m; ++r) {
        Linv[r][r] = Elem::one();
        for (int c = 0; c < m; ++c) A[r][c] = g.at(order[r], order[c]);
    }
    std::vector<int> sigma(m, -1);
    for (int j = 0; j < m; ++j) {
        int i = m - 1;
        while (i >= 0 && A[i][j].is_zero()) --i;
        if (i < 0) throw NotInGroup("singular Levi part");
        Elem piv_inv = A[i][j].inv();
        for (int r = 0; r < i; ++r) {
            if (A[r][j].is_zero()) continue;
            Elem f = A[r][j] * piv_inv;
            for (int c = j; c < m; ++c)
                if (!A[i][c].is_zero()) A[r][c] += f * A[i][c];
            for (int k = 0; k < m; ++k)
                if (!Linv[k][r].is_zero()) Linv[k][i] += f * Linv[k][r];
        }
        for (int c = j + 1; c < m; ++c) {
            if (A[i][c].is_zero()) continue;
            Elem f = A[i][c] * piv_inv;
            for (int r = 0; r < m; ++r)
                if (!A[r][j].is_zero()) A[r][c] += f * A[r][j];
        }
        sigma[j] = i;
    }

    std::vector<int> perm(n), sign(n);
    for (int k = 0; k < n; ++k) {
        Root wt = weight_of(n, order[sigma[k]]);
        for (int l = 0; l < n; ++l)
            if (wt.c[l]) {
                perm[k] = l;
                sign[k] = wt.c[l];
            }
    }
    WeylElement w;
    try {
        w = WeylElement::signed_permutation(perm, sign);
    } catch (const std::invalid_argument&) {
        throw NotInGroup("Bruhat cell is not a signed permutation");
    }

    QMatrix Y = QMatrix::identity_q(n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) Y.at(order[r], order[c]) = Linv[r][c];
    QMatrix Sw = weyl_rep(spec, w);
    QMatrix B0 = Sw.inverse() * Y.inverse() * g.pi();

    // Translation part of u_w: z = v_w pi(s_w) lives on the e-positions and
    // v(g)|_e = z|_e B0[e,e].
    std::vector<Elem> z(m);
    for (int q = 0; q < n; ++q) {
        Elem s = g.at(m, q);
        for (int p = 0; p < q; ++p)
            if (!z[p].is_zero()) s += z[p] * B0.at(p, q);
        if (B0.at(q, q).is_zero()) throw NotInGroup("degenerate Borel part");
        z[q] = s / B0.at(q, q);
    }
    QMatrix Uw = Y;
    {
        QMatrix Zm = translation(n, z);
        QMatrix T = Zm * Sw.inverse();  // translation row z * pi(s_w)^-1
        for (int q = 0; q < m; ++q) Uw.at(m, q) = T.at(m, q);
    }
    QMatrix X = Sw.inverse() * Uw.inverse() * g;

    NormalForm nf;
    nf.w = w;
    nf.h.resize(n);
    for (int i = 0; i < n; ++i) {
        nf.h[i] = X.at(i, i);
        if (nf.h[i].is_zero()) throw NotInGroup("degenerate torus part");
    }
    std::vector<Elem> hinv;
    for (const Elem& c : nf.h) hinv.push_back(c.inv());
    QMatrix U = torus(hinv) * X;

    auto order_roots = positive_roots_in_order(n);
    auto inv_set = inversion_set(w.inverse());
    auto pw = peel(n, Uw, inv_set);
    if (!pw) throw NotInGroup("u_w is not a product of its root elements");
    auto pu = peel(n, U, order_roots);
    if (!pu) throw NotInGroup("the unipotent part is not a product of positive root elements");
    // peel checked Uw and U exactly, and g = Uw Sw h U by construction of X
    nf.u_w = std::move(*pw);
    nf.u = std::move(*pu);
    return nf;
}

DomainCheck check_domains(const GroupSpec& spec, const NormalForm& nf) {
    DomainCheck d;
    const Tower& T = spec.tower();
    for (const auto* list : {&nf.u_w, &nf.u})
        for (const auto& [a, c] : *list)
            if (!spec.in_root_domain(a, c)) {
                d.roots_ok = false;
                d.reason = "coefficient " + T.to_string(c) + " of root " + a.to_string() + " outside its domain";
                return d;
            }
    d.cartan = spec.cartan_member(nf.h);
    if (d.cartan == Tri::No) d.reason = "torus part outside the Cartan subgroup";
    if (d.cartan == Tri::Unknown) d.reason = "Cartan membership not resolved within the search bound";
    return d;
}

NormalForm bruhat_normal_form(const GroupSpec& spec, const QMatrix& g) {
    NormalForm nf = decompose(spec, g);
    DomainCheck d = check_domains(spec, nf);
    if (!d.roots_ok || d.cartan == Tri::No) throw NotInGroup(d.reason);
    return nf;
}

std::string verdict_name(Membership::Verdict v) {
    switch (v) {
        case Membership::Verdict::Yes: return "yes";
        case Membership::Verdict::No: return "no";
        case Membership::Verdict::UndecidedCartan: return "undecided_cartan";
    }
    return "?";
}

Membership membership(const GroupSpec& spec, const QMatrix& g) {
    Membership r;
    try {
        NormalForm nf = decompose(spec, g);
        DomainCheck d = check_domains(spec, nf);
        r.normal_form = nf;
        r.reason = d.reason;
        if (!d.roots_ok || d.cartan == Tri::No) r.verdict = Membership::Verdict::No;
        else if (d.cartan == Tri::Unknown) r.verdict = Membership::Verdict::UndecidedCartan;
        else r.verdict = Membership::Verdict::Yes;
    } catch (const NotInBigGroup& e) {
        r.verdict = Membership::Verdict::No;
        r.reason = e.what();
    } catch (const NotInGroup& e) {
        r.verdict = Membership::Verdict::No;
        r.reason = e.what();
    }
    return r;
}

// ---- conjugation ------------------------------------------------------------------

QMatrix h_lambda(int n, const Elem& lambda) { return torus(std::vector<Elem>(n, lambda)); }

GroupSpec conjugate_by_h_lambda(const GroupSpec& spec, const Elem& lambda) {
    if (lambda.is_zero()) throw DivisionByZero();
    Elem l2 = lambda.sq();
    if (spec.variant == Variant::Rank2 && !spec.derived.K0.contains(l2))
        throw InvalidData("rank-2 conjugation needs lambda^2 in K0");
    BCData d = scale_data(spec.data, l2);
    std::optional<Elem> v1, v2;
    if (spec.variant == Variant::Rank2) v1 = spec.v1;
    if (spec.variant != Variant::Standard) v2 = l2 * spec.v2;
    return make_group_spec(std::move(d), spec.variant, v1, v2, spec.cartan_search_bound);
}

std::vector<std::pair<std::string, QMatrix>> sample_generators(const GroupSpec& spec, Rng& rng, int per_family) {
    int n = spec.rank();
    const Tower& T = spec.tower();
    std::vector<std::pair<std::string, QMatrix>> out;
    auto simple = simple_roots(n);
    Root a1 = simple[0], an = simple[n - 1], lan = 2 * an;
    for (int k = 0; k < per_family; ++k) {
        if (n >= 2) {
            Elem c = spec.random_root_coeff(a1, rng);
            out.push_back({"x_a1(" + T.to_string(c) + ")", root_element(a1, c)});
        }
        Elem c = spec.random_root_coeff(an, rng);
        out.push_back({"y_an(" + T.to_string(c) + ")", root_element(an, c)});
        c = spec.random_root_coeff(lan, rng);
        out.push_back({"x_2an(" + T.to_string(c) + ")", root_element(lan, c)});
        for (int i = 1; i <= n; ++i) {
            c = spec.random_cartan_coeff(i, rng);
            out.push_back({"h" + std::to_string(i) + "(" + T.to_string(c) + ")",
                           atom_matrix(spec, Atom::cartan(i, c))});
        }
    }
    for (int i = 1; i <= n; ++i) out.push_back({"s" + std::to_string(i), simple_rep(spec, i)});
    return out;
}

}  // namespace bcn
