#include "gf63.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace bcn::gf63 {

namespace {

// ---- GF(2^63) ---------------------------------------------------------------

using G = std::uint64_t;
using U128 = unsigned __int128;
constexpr G kMask = (G{1} << 63) - 1;

G reduce(U128 v) {
    // x^63 = x + 1; two folds bring a 126-bit product below 2^63
    for (int i = 0; i < 2; ++i) {
        U128 top = v >> 63;
        v = (v & kMask) ^ top ^ (top << 1);
    }
    return static_cast<G>(v);
}

G mul_soft(G a, G b) {
    U128 p = 0;
    while (b) {
        p ^= static_cast<U128>(a) << std::countr_zero(b);
        b &= b - 1;
    }
    return reduce(p);
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse2"))) G mul_clmul(G a, G b) {
    __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                     _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    G lo = static_cast<G>(_mm_cvtsi128_si64(p));
    G hi = static_cast<G>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
    return reduce((static_cast<U128>(hi) << 64) | lo);
}
const bool kHaveClmul = __builtin_cpu_supports("pclmul");
#else
const bool kHaveClmul = false;
G mul_clmul(G a, G b) { return mul_soft(a, b); }
#endif

inline G gmul(G a, G b) { return kHaveClmul ? mul_clmul(a, b) : mul_soft(a, b); }

G gpow(G a, std::uint64_t e) {
    G r = 1;
    while (e) {
        if (e & 1) r = gmul(r, a);
        a = gmul(a, a);
        e >>= 1;
    }
    return r;
}

// extended Euclid in F2[x] against x^63 + x + 1; a nonzero
G ginv(G a) {
    G u = a, v = (G{1} << 63) | 3, g1 = 1, g2 = 0;
    while (u != 1) {
        int j = std::countl_zero(v) - std::countl_zero(u);
        if (j < 0) {
            std::swap(u, v);
            std::swap(g1, g2);
            j = -j;
        }
        u ^= v << j;
        g1 ^= g2 << j;
    }
    return g1;
}

struct Rng {
    std::uint64_t s;
    G next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return ((z ^ (z >> 31)) & kMask) | 2;  // avoid 0 and 1
    }
};

// ---- dense univariate, low degree first, no trailing zeros -----------------

using UP = std::vector<G>;

void trim(UP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UP& p) { return static_cast<int>(p.size()) - 1; }

G eval(const UP& p, G x) {
    G r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = gmul(r, x) ^ p[i];
    return r;
}

UP mul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= gmul(a[i], b[j]);
    return r;
}

UP scale(UP p, G c) {
    for (G& x : p) x = gmul(x, c);
    return p;
}

// a = q b + r; b nonzero
UP divmod(UP a, const UP& b, UP* rem) {
    UP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    G inv = ginv(b.back());
    while (a.size() >= b.size()) {
        G f = gmul(a.back(), inv);
        std::size_t sh = a.size() - b.size();
        q[sh] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + sh] ^= gmul(f, b[i]);
        trim(a);
    }
    if (rem) *rem = std::move(a);
    return q;
}

UP monic(UP p) {
    if (p.empty() || p.back() == 1) return p;
    return scale(std::move(p), ginv(p.back()));
}

// a <- a mod b in place; b nonzero
void reduce_mod(UP& a, const UP& b, G inv_lead) {
    const std::size_t nb = b.size();
    while (a.size() >= nb) {
        G f = gmul(a.back(), inv_lead);
        std::size_t sh = a.size() - nb;
        for (std::size_t i = 0; i + 1 < nb; ++i) a[i + sh] ^= gmul(f, b[i]);
        a.pop_back();
        trim(a);
    }
}

UP ugcd(UP a, UP b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        reduce_mod(a, b, ginv(b.back()));
        std::swap(a, b);
    }
    return monic(std::move(a));
}

// ---- sparse multivariate over GF(2^63) -------------------------------------
//
// Exponents of r variables packed into a key, variable 0 in the highest
// field, so key order is lex order and the last variable is the low 16 bits.

struct Term {
    U128 key;
    G c;
};
using GP = std::vector<Term>;  // strictly decreasing keys, nonzero coefficients

constexpr int kBits = 16;
constexpr U128 kLow = 0xFFFF;

GP add(const GP& a, const GP& b) {
    GP r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].key > a[i].key) {
            r.push_back(b[j++]);
        } else {
            G c = a[i].c ^ b[j].c;
            if (c) r.push_back({a[i].key, c});
            ++i;
            ++j;
        }
    }
    return r;
}

GP scale(GP p, G c) {
    for (Term& t : p) t.c = gmul(t.c, c);
    return p;
}

// p as a polynomial in the leading variables with coefficients in the last
struct Split {
    std::vector<U128> keys;  // decreasing, last variable removed
    std::vector<UP> coeffs;
};

Split split_last(const GP& p) {
    Split s;
    for (const Term& t : p) {
        U128 k = t.key >> kBits;
        unsigned e = static_cast<unsigned>(t.key & kLow);
        if (s.keys.empty() || s.keys.back() != k) {
            s.keys.push_back(k);
            s.coeffs.emplace_back(e + 1, 0);
        }
        s.coeffs.back()[e] = t.c;
    }
    return s;
}

GP join_last(const Split& s) {
    GP r;
    for (std::size_t i = 0; i < s.keys.size(); ++i)
        for (std::size_t e = s.coeffs[i].size(); e-- > 0;)
            if (s.coeffs[i][e]) r.push_back({(s.keys[i] << kBits) | e, s.coeffs[i][e]});
    return r;
}

GP eval_last(const Split& s, G x) {
    GP r;
    for (std::size_t i = 0; i < s.keys.size(); ++i) {
        G v = eval(s.coeffs[i], x);
        if (v) r.push_back({s.keys[i], v});
    }
    return r;
}

UP content(const Split& s) {
    UP g;
    for (const UP& c : s.coeffs) {
        g = g.empty() ? monic(c) : ugcd(std::move(g), c);
        if (g.size() == 1) break;
    }
    return g;
}

void divide_content(Split& s, const UP& c) {
    if (c.size() == 1) return;
    for (UP& x : s.coeffs) x = divmod(std::move(x), c, nullptr);
}

int deg_last(const Split& s) {
    int d = 0;
    for (const UP& c : s.coeffs) d = std::max(d, deg(c));
    return d;
}

GP from_univariate(const UP& p) {
    GP r;
    for (std::size_t e = p.size(); e-- > 0;)
        if (p[e]) r.push_back({static_cast<U128>(e), p[e]});
    return r;
}

UP to_univariate(const GP& p) {
    UP r;
    if (p.empty()) return r;
    r.assign(static_cast<std::size_t>(p.front().key) + 1, 0);
    for (const Term& t : p) r[static_cast<std::size_t>(t.key)] = t.c;
    return r;
}

// gcd of nonzero a, b in r variables, up to a nonzero scalar
std::optional<GP> brown(const GP& a, const GP& b, int r, Rng& rng) {
    if (r == 1) return from_univariate(ugcd(to_univariate(a), to_univariate(b)));

    Split sa = split_last(a), sb = split_last(b);
    UP ca = content(sa), cb = content(sb);
    divide_content(sa, ca);
    divide_content(sb, cb);
    UP c = ugcd(ca, cb);
    const UP& lca = sa.coeffs.front();
    const UP& lcb = sb.coeffs.front();
    UP glc = ugcd(lca, lcb);
    const int bound = deg(glc) + std::min(deg_last(sa), deg_last(sb));

    auto with_content = [&](GP pp) {
        Split s = split_last(pp);
        divide_content(s, content(s));
        for (UP& x : s.coeffs) x = mul(x, c);
        return join_last(s);
    };

    GP H;
    UP q;  // product of (y - beta) over the points used
    U128 lead = 0;
    int points = 0;
    for (int attempts = 0; attempts < 4 * bound + 40; ++attempts) {
        G beta = rng.next();
        if (eval(lca, beta) == 0 || eval(lcb, beta) == 0) continue;
        auto img = brown(eval_last(sa, beta), eval_last(sb, beta), r - 1, rng);
        if (!img) return std::nullopt;
        if (img->front().key == 0) return with_content({{0, 1}});
        G norm = gmul(eval(glc, beta), ginv(img->front().c));
        *img = scale(std::move(*img), norm);
        U128 L = img->front().key;
        if (points > 0 && L > lead) continue;  // unlucky point
        if (points == 0 || L < lead) {
            H.clear();
            for (const Term& t : *img) H.push_back({t.key << kBits, t.c});
            q = {beta, 1};
            lead = L;
            points = 1;
            continue;
        }
        GP diff = add(*img, eval_last(split_last(H), beta));
        if (diff.empty()) return with_content(std::move(H));
        if (points > bound) {
            points = 0;  // degree bound exceeded: start over
            continue;
        }
        // Newton step: H += diff * q / q(beta)
        UP qs = scale(q, ginv(eval(q, beta)));
        GP step;
        for (const Term& t : diff)
            for (std::size_t e = qs.size(); e-- > 0;)
                if (qs[e]) step.push_back({(t.key << kBits) | e, gmul(t.c, qs[e])});
        H = add(H, step);
        q = mul(q, UP{beta, 1});
        ++points;
    }
    return std::nullopt;
}

U128 pack(Mono m, const std::vector<int>& order) {
    U128 k = 0;
    for (int v : order) k = (k << kBits) | mono_exp(m, v);
    return k;
}

GP to_gp(const Poly& p, const std::vector<int>& order) {
    GP r;
    r.reserve(p.size());
    for (Mono m : p.terms()) r.push_back({pack(m, order), 1});
    std::sort(r.begin(), r.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
    return r;
}

std::optional<Poly> from_gp(const GP& g, const std::vector<int>& order) {
    std::vector<Mono> t;
    t.reserve(g.size());
    const int r = static_cast<int>(order.size());
    for (const Term& x : g) {
        if (x.c != 1) return std::nullopt;
        Mono m = 0;
        for (int j = 0; j < r; ++j)
            m |= mono_var(order[j], static_cast<unsigned>((x.key >> (kBits * (r - 1 - j))) & kLow));
        t.push_back(m);
    }
    return Poly::from_terms(std::move(t));
}

UP specialize(const Poly& p, int v, const G* point) {
    UP out(p.degree(v) + 1, 0);
    for (Mono m : p.terms()) {
        G val = 1;
        for (int u = 0; u < kMaxVars; ++u) {
            if (u == v) continue;
            unsigned e = mono_exp(m, u);
            if (e) val = gmul(val, gpow(point[u], e));
        }
        out[mono_exp(m, v)] ^= val;
    }
    return out;
}

}  // namespace

std::vector<int> image_gcd_degrees(const Poly& a, const Poly& b, std::uint32_t vars) {
    Rng rng{a.hash() ^ (b.hash() * 0x9e3779b97f4a7c15ull)};
    std::vector<int> out(kMaxVars, -1);
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(vars >> v & 1)) continue;
        for (int attempt = 0; attempt < 3 && out[v] < 0; ++attempt) {
            G point[kMaxVars];
            for (G& x : point) x = rng.next();
            UP ua = specialize(a, v, point), ub = specialize(b, v, point);
            if (ua.back() == 0 || ub.back() == 0) continue;
            out[v] = deg(ugcd(std::move(ua), std::move(ub)));
        }
        if (out[v] == 0) break;
    }
    return out;
}

std::optional<Poly> dense_gcd(const Poly& a, const Poly& b, std::uint32_t vars) {
    // main variable: smallest degree; it is never evaluated
    std::vector<int> order;
    for (int v = 0; v < kMaxVars; ++v)
        if (vars >> v & 1) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return std::max(a.degree(x), b.degree(x)) < std::max(a.degree(y), b.degree(y));
    });
    GP ga = to_gp(a, order), gb = to_gp(b, order);
    Rng rng{a.hash() * 31 + b.hash()};
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto g = brown(ga, gb, static_cast<int>(order.size()), rng);
        if (!g || g->empty()) continue;
        G norm = ginv(g->front().c);
        auto p = from_gp(scale(std::move(*g), norm), order);
        if (p && a.divide_exact(*p) && b.divide_exact(*p)) return p;
    }
    return std::nullopt;
}

namespace {

std::size_t rank_of(std::vector<std::vector<G>> m) {
    std::size_t rank = 0;
    const std::size_t width = m.empty() ? 0 : m.front().size();
    for (std::size_t col = 0; col < width && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        G inv = ginv(m[rank][col]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            G f = gmul(m[r][col], inv);
            for (std::size_t j = col; j < width; ++j) m[r][j] ^= gmul(f, m[rank][j]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t specialized_rank(const std::vector<std::vector<Poly>>& rows, std::uint64_t seed) {
    Rng rng{seed};
    G point[kMaxVars];
    for (G& x : point) x = rng.next();
    std::vector<std::vector<G>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<G> r;
        r.reserve(row.size());
        for (const Poly& p : row) {
            G acc = 0;
            for (Mono t : p.terms()) {
                G val = 1;
                for (int v = 0; v < kMaxVars; ++v)
                    if (unsigned e = mono_exp(t, v)) val = gmul(val, gpow(point[v], e));
                acc ^= val;
            }
            r.push_back(acc);
        }
        m.push_back(std::move(r));
    }
    return rank_of(std::move(m));
}

namespace {

// F2[s] -> GF[y] / (y_v^(2^b_v) - p_v^(2^b_v)), s_v -> y_v.  Coordinates in the
// basis y^r, r_v < 2^b_v, with the mixed radix of Tower::coords_projective.
struct ResidueAlgebra {
    int nv = 0;
    unsigned width[kMaxVars] = {};
    G point[kMaxVars] = {}, wrap[kMaxVars] = {};
    std::size_t D = 1;
    std::vector<std::vector<std::pair<std::size_t, G>>> table;  // table[i][j] = (index, factor) of y^i y^j

    ResidueAlgebra(const std::vector<int>& bits, Rng& rng) : nv(static_cast<int>(bits.size())) {
        for (int v = 0; v < nv; ++v) {
            width[v] = 1u << bits[v];
            point[v] = rng.next();
            wrap[v] = gpow(point[v], width[v]);
            D *= width[v];
        }
        table.assign(D, std::vector<std::pair<std::size_t, G>>(D));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                std::size_t a = i, b = j, idx = 0, stride = 1;
                G f = 1;
                for (int v = nv - 1; v >= 0; --v) {
                    unsigned r = static_cast<unsigned>(a % width[v] + b % width[v]);
                    a /= width[v];
                    b /= width[v];
                    if (r >= width[v]) {
                        r -= width[v];
                        f = gmul(f, wrap[v]);
                    }
                    idx += r * stride;
                    stride *= width[v];
                }
                table[i][j] = {idx, f};
            }
    }

    std::vector<G> image(const Poly& p) const {
        std::vector<G> out(D, 0);
        for (Mono m : p.terms()) {
            std::size_t idx = 0;
            G val = 1;
            for (int v = 0; v < nv; ++v) {
                unsigned e = mono_exp(m, v), r = e & (width[v] - 1);
                idx = idx * width[v] + r;
                if (e > r) val = gmul(val, gpow(point[v], e - r));
            }
            out[idx] ^= val;
        }
        return out;
    }

    std::vector<G> mul(const std::vector<G>& a, const std::vector<G>& b) const {
        std::vector<G> out(D, 0);
        for (std::size_t i = 0; i < D; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < D; ++j) {
                if (!b[j]) continue;
                auto [idx, f] = table[i][j];
                out[idx] ^= gmul(gmul(a[i], b[j]), f);
            }
        }
        return out;
    }
};

}  // namespace

std::optional<std::size_t> residue_rank(const std::vector<ResidueRow>& rows, const std::vector<int>& bits,
                                        std::uint64_t seed) {
    Rng rng{seed};
    ResidueAlgebra A(bits, rng);
    std::vector<std::vector<G>> m;
    for (const ResidueRow& row : rows) {
        std::vector<G> x = A.image(*row.num);
        if (row.e > 0) {
            // den^(2^e - 1); den^(2^e) is a scalar and must not vanish at the point
            std::vector<G> g = A.image(*row.den), sq = g, acc = g;
            for (int j = 1; j < row.e; ++j) {
                sq = A.mul(sq, sq);
                acc = A.mul(acc, sq);
            }
            std::vector<G> norm = A.mul(acc, g);
            if (norm[0] == 0) return std::nullopt;
            x = A.mul(x, acc);
        }
        m.push_back(std::move(x));
    }
    return rank_of(std::move(m));
}

}  // namespace bcn::gf63
