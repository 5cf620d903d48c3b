#include "bcn/poly.hpp"

#include "gf63.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace bcn {

namespace {

constexpr Mono repeat16(std::uint16_t x) {
    Mono r = 0;
    for (int i = 0; i < kMaxVars; ++i) r = (r << kExpBits) | x;
    return r;
}
constexpr Mono kHigh = repeat16(0x8000);

void check_exponents(Mono m) {
    if (m & kHigh) throw std::overflow_error("polynomial exponent overflow");
}

// ---- dense univariate helpers -------------------------------------------

struct Bits {
    std::vector<std::uint64_t> w;

    int deg() const {
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
            if (w[i]) return i * 64 + 63 - std::countl_zero(w[i]);
        return -1;
    }
    void trim() {
        while (!w.empty() && w.back() == 0) w.pop_back();
    }
    void xor_shifted(const Bits& b, int s) {
        int ws = s / 64, bs = s % 64;
        std::size_t need = b.w.size() + ws + 1;
        if (w.size() < need) w.resize(need, 0);
        for (std::size_t i = 0; i < b.w.size(); ++i) {
            w[i + ws] ^= b.w[i] << bs;
            if (bs) w[i + ws + 1] ^= b.w[i] >> (64 - bs);
        }
    }
};

Bits to_bits(const Poly& p, int v) {
    Bits b;
    if (p.is_zero()) return b;
    unsigned d = mono_exp(p.lead(), v);
    b.w.assign(d / 64 + 1, 0);
    for (Mono m : p.terms()) {
        unsigned e = mono_exp(m, v);
        b.w[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    return b;
}

Poly from_bits(const Bits& b, int v) {
    std::vector<Mono> t;
    for (int i = static_cast<int>(b.w.size()) - 1; i >= 0; --i) {
        std::uint64_t x = b.w[i];
        while (x) {
            int hi = 63 - std::countl_zero(x);
            t.push_back(mono_var(v, static_cast<unsigned>(i * 64 + hi)));
            x &= ~(std::uint64_t{1} << hi);
        }
    }
    return Poly::from_terms(std::move(t));
}

Bits bits_mul(const Bits& a, const Bits& b) {
    Bits r;
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        std::uint64_t x = a.w[i];
        while (x) {
            int lo = std::countr_zero(x);
            r.xor_shifted(b, static_cast<int>(i * 64) + lo);
            x &= x - 1;
        }
    }
    r.trim();
    return r;
}

// a := a mod b, q accumulates the quotient when non-null
void bits_divmod(Bits& a, const Bits& b, Bits* q) {
    int db = b.deg();
    for (int da = a.deg(); da >= db; da = a.deg()) {
        a.xor_shifted(b, da - db);
        if (q) {
            int s = da - db;
            if (q->w.size() <= static_cast<std::size_t>(s / 64)) q->w.resize(s / 64 + 1, 0);
            q->w[s / 64] ^= std::uint64_t{1} << (s % 64);
        }
    }
    a.trim();
}

Bits bits_gcd(Bits a, Bits b) {
    a.trim();
    b.trim();
    while (b.deg() >= 0) {
        bits_divmod(a, b, nullptr);
        std::swap(a, b);
    }
    return a;
}

int single_var(std::uint32_t s) {
    return std::popcount(s) == 1 ? std::countr_zero(s) : -1;
}

// ---- recursive representation --------------------------------------------

std::vector<Poly> split_in(const Poly& p, int v) {
    std::vector<std::vector<Mono>> buckets(p.degree(v) + 1);
    Mono mask = ~mono_var(v, 0xFFFF);
    for (Mono m : p.terms()) buckets[mono_exp(m, v)].push_back(m & mask);
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly join_in(const std::vector<Poly>& c, int v) {
    std::vector<Mono> t;
    for (std::size_t d = 0; d < c.size(); ++d)
        for (Mono m : c[d].terms()) t.push_back(m | mono_var(v, static_cast<unsigned>(d)));
    return Poly::from_terms(std::move(t));
}

void trim(std::vector<Poly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly content_of(const std::vector<Poly>& c) {
    Poly g;
    for (const Poly& x : c) {
        if (x.is_zero()) continue;
        g = gcd(g, x);
        if (g.is_one()) break;
    }
    return g;
}

void make_primitive(std::vector<Poly>& c) {
    Poly g = content_of(c);
    if (g.is_one()) return;
    for (Poly& x : c)
        if (!x.is_zero()) x = *x.divide_exact(g);
}

// primitive pseudo-remainder sequence in the variable whose coefficients are c
std::vector<Poly> prs_gcd(std::vector<Poly> a, std::vector<Poly> b) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return {Poly::one()};
        const Poly lcb = b.back();
        while (a.size() >= b.size()) {
            Poly lca = a.back();
            std::size_t shift = a.size() - b.size();
            for (Poly& x : a) x = x * lcb;
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += lca * b[i];
            trim(a);
        }
        make_primitive(a);
        std::swap(a, b);
    }
    return a;
}


Poly prs_in(const Poly& a, const Poly& b, int v);

// The same large gcd tends to be asked for repeatedly while clearing
// denominators of one matrix, so remember the last few.
std::optional<Poly> cached_dense_gcd(const Poly& a, const Poly& b, std::uint32_t vars) {
    struct Entry {
        std::size_t ha, hb;
        Poly a, b, g;
    };
    constexpr std::size_t kSlots = 64;
    thread_local std::vector<Entry> cache;
    thread_local std::size_t next = 0;
    std::size_t ha = a.hash(), hb = b.hash();
    for (const Entry& e : cache)
        if (e.ha == ha && e.hb == hb && e.a == a && e.b == b) return e.g;
    auto g = gf63::dense_gcd(a, b, vars);
    if (!g) return g;
    Entry e{ha, hb, a, b, *g};
    if (cache.size() < kSlots) {
        cache.push_back(std::move(e));
    } else {
        cache[next] = std::move(e);
        next = (next + 1) % kSlots;
    }
    return g;
}

Poly gcd_nomono(const Poly& a, const Poly& b) {
    if (a.is_one() || b.is_one()) return Poly::one();
    if (a == b) return a;
    std::uint32_t sa = a.support(), sb = b.support();
    std::uint32_t both = sa & sb;
    if (both == 0) return Poly::one();
    // one argument often divides the other; a failed attempt stops early
    if (b.size() <= a.size() && a.divide_exact(b)) return b;
    if (a.size() < b.size() && b.divide_exact(a)) return a;
    if (sa == sb) {
        int v = single_var(sa);
        if (v >= 0) return from_bits(bits_gcd(to_bits(a, v), to_bits(b, v)), v);
    }
    // eliminate variables occurring in only one argument
    std::uint32_t only = (sa | sb) & ~both;
    if (only) {
        int v = std::countr_zero(only);
        if (sa >> v & 1) return gcd(content_of(split_in(a, v)), b);
        return gcd(a, content_of(split_in(b, v)));
    }
    if (std::popcount(both) >= 2) {
        std::vector<int> deg = gf63::image_gcd_degrees(a, b, both);
        for (int v = 0; v < kMaxVars; ++v)
            if (deg[v] == 0) {
                // the gcd does not involve v: work with the contents in v
                Poly ca = content_of(split_in(a, v));
                if (ca.is_one()) return ca;
                return gcd(ca, content_of(split_in(b, v)));
            }
        auto matches = [&](const Poly& p) {
            for (int v = 0; v < kMaxVars; ++v)
                if ((both >> v & 1) && deg[v] >= 0 && deg[v] != static_cast<int>(p.degree(v))) return false;
            return true;
        };
        if (matches(a) && b.divide_exact(a)) return a;
        if (matches(b) && a.divide_exact(b)) return b;
        if (auto g = cached_dense_gcd(a, b, both)) return *g;
        // pseudo-remainders in the variable of smallest degree
        int best = -1;
        for (int v = 0; v < kMaxVars; ++v)
            if ((both >> v & 1) &&
                (best < 0 || std::max(a.degree(v), b.degree(v)) < std::max(a.degree(best), b.degree(best))))
                best = v;
        return prs_in(a, b, best);
    }
    return prs_in(a, b, std::countr_zero(both));
}

Poly prs_in(const Poly& a, const Poly& b, int v) {
    auto ca = split_in(a, v), cb = split_in(b, v);
    Poly ga = content_of(ca), gb = content_of(cb);
    if (!ga.is_one())
        for (Poly& x : ca)
            if (!x.is_zero()) x = *x.divide_exact(ga);
    if (!gb.is_one())
        for (Poly& x : cb)
            if (!x.is_zero()) x = *x.divide_exact(gb);
    Poly c = gcd(ga, gb);
    Poly g = join_in(prs_gcd(std::move(ca), std::move(cb)), v);
    return c * g;
}

}  // namespace

bool mono_divides(Mono a, Mono b) {
    Mono d = (b | kHigh) - a;
    return (d & kHigh) == kHigh;
}

Mono mono_min(Mono a, Mono b) {
    Mono r = 0;
    for (int v = 0; v < kMaxVars; ++v) r |= mono_var(v, std::min(mono_exp(a, v), mono_exp(b, v)));
    return r;
}

Mono mono_max(Mono a, Mono b) {
    Mono r = 0;
    for (int v = 0; v < kMaxVars; ++v) r |= mono_var(v, std::max(mono_exp(a, v), mono_exp(b, v)));
    return r;
}

unsigned mono_total_degree(Mono m) {
    unsigned s = 0;
    for (int v = 0; v < kMaxVars; ++v) s += mono_exp(m, v);
    return s;
}

namespace {

// ---- heap-based sparse arithmetic ------------------------------------------
// Both walk the products in decreasing monomial order with a heap of one cursor
// per row, so the output comes out sorted and nothing of size |a|*|b| is built.

template <class K>
struct Cursor {
    K m;
    std::uint32_t i, j;
    bool operator<(const Cursor& o) const { return m < o.m; }
};

template <class K>
std::vector<K> heap_mul(const std::vector<K>& a, const std::vector<K>& b) {
    const std::vector<K>& rows = a.size() <= b.size() ? a : b;
    const std::vector<K>& cols = a.size() <= b.size() ? b : a;
    std::vector<Cursor<K>> h;
    h.reserve(rows.size());
    for (std::uint32_t i = 0; i < rows.size(); ++i) h.push_back({rows[i] + cols[0], i, 0});
    std::make_heap(h.begin(), h.end());
    std::vector<K> out;
    while (!h.empty()) {
        K m = h.front().m;
        bool odd = false;
        while (!h.empty() && h.front().m == m) {
            std::pop_heap(h.begin(), h.end());
            Cursor<K>& c = h.back();
            odd = !odd;
            if (c.j + 1 < cols.size()) {
                c = {rows[c.i] + cols[c.j + 1], c.i, c.j + 1};
                std::push_heap(h.begin(), h.end());
            } else {
                h.pop_back();
            }
        }
        if (odd) out.push_back(m);
    }
    return out;
}

// Quotient of an exact division a / b, or nullopt as soon as a remainder term
// is not divisible by lead(b) or a quotient term exceeds `limit` = deg(a) - deg(b)
// in some variable, which keeps every product below deg(a).  `guard` has the
// top bit of every exponent field.
template <class K>
std::optional<std::vector<K>> heap_div(const std::vector<K>& a, const std::vector<K>& b, K limit, K guard) {
    const K lb = b.front();
    std::vector<K> q;
    std::vector<Cursor<K>> h;  // cursors over q[i] * b[j], j >= 1
    std::size_t k = 0;
    while (k < a.size() || !h.empty()) {
        K m = k < a.size() ? a[k] : K(0);
        if (!h.empty() && (k >= a.size() || h.front().m > m)) m = h.front().m;
        bool odd = false;
        if (k < a.size() && a[k] == m) {
            odd = true;
            ++k;
        }
        while (!h.empty() && h.front().m == m) {
            std::pop_heap(h.begin(), h.end());
            Cursor<K>& c = h.back();
            odd = !odd;
            if (c.j + 1 < b.size()) {
                c = {q[c.i] + b[c.j + 1], c.i, c.j + 1};
                std::push_heap(h.begin(), h.end());
            } else {
                h.pop_back();
            }
        }
        if (!odd) continue;
        if ((((m | guard) - lb) & guard) != guard) return std::nullopt;
        K qt = m - lb;
        if ((((limit | guard) - qt) & guard) != guard) return std::nullopt;
        q.push_back(qt);
        if (b.size() > 1) {
            h.push_back({q.back() + b[1], static_cast<std::uint32_t>(q.size() - 1), 1});
            std::push_heap(h.begin(), h.end());
        }
    }
    return q;
}

// Order-preserving repacking of monomials into 64 bits, each exponent field
// wide enough for `bound` plus a guard bit.
struct Packing {
    int shift[kMaxVars] = {};
    unsigned width[kMaxVars] = {};
    bool ok = false;
    std::uint64_t guard = 0;

    explicit Packing(Mono bound) {
        int used = 0;
        for (int v = kMaxVars - 1; v >= 0; --v) {
            unsigned e = mono_exp(bound, v);
            width[v] = e ? static_cast<unsigned>(std::bit_width(e)) + 1 : 0;
            shift[v] = used;
            used += static_cast<int>(width[v]);
            if (width[v]) guard |= std::uint64_t{1} << (shift[v] + static_cast<int>(width[v]) - 1);
        }
        ok = used <= 64;
    }
    std::uint64_t pack(Mono m) const {
        std::uint64_t r = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (width[v]) r |= static_cast<std::uint64_t>(mono_exp(m, v)) << shift[v];
        return r;
    }
    Mono unpack(std::uint64_t r) const {
        Mono m = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (width[v]) m |= mono_var(v, static_cast<unsigned>((r >> shift[v]) & ((std::uint64_t{1} << width[v]) - 1)));
        return m;
    }
    std::vector<std::uint64_t> pack(const std::vector<Mono>& t) const {
        std::vector<std::uint64_t> r;
        r.reserve(t.size());
        for (Mono m : t) r.push_back(pack(m));
        return r;
    }
    std::vector<Mono> unpack(const std::vector<std::uint64_t>& t) const {
        std::vector<Mono> r;
        r.reserve(t.size());
        for (std::uint64_t m : t) r.push_back(unpack(m));
        return r;
    }
};

std::vector<Mono> sparse_mul(const std::vector<Mono>& a, const std::vector<Mono>& b, Mono bound) {
    Packing P(bound);
    if (P.ok) return P.unpack(heap_mul(P.pack(a), P.pack(b)));
    return heap_mul(a, b);
}

std::optional<std::vector<Mono>> sparse_div(const std::vector<Mono>& a, const std::vector<Mono>& b) {
    Mono da = 0, db = 0;
    for (Mono m : a) da = mono_max(da, m);
    for (Mono m : b) db = mono_max(db, m);
    if (!mono_divides(db, da)) return std::nullopt;
    Packing P(da);
    if (P.ok) {
        auto q = heap_div(P.pack(a), P.pack(b), P.pack(da - db), P.guard);
        if (!q) return std::nullopt;
        return P.unpack(*q);
    }
    return heap_div(a, b, da - db, kHigh);
}

// ---- Kronecker substitution ------------------------------------------------
// x^e -> z^(sum e_v stride_v) maps polynomials with e_v < D_v injectively onto
// univariate ones, where products become shifted XORs of bit vectors.

constexpr std::uint64_t kKronMaxBits = std::uint64_t{1} << 27;

struct Kron {
    std::uint64_t stride[kMaxVars] = {}, size[kMaxVars] = {};
    std::uint64_t bits = 1;

    // size[v] = bound_v + 1 for the variables in `support`; fails past kKronMaxBits
    bool init(Mono bound, std::uint32_t support) {
        for (int v = kMaxVars - 1; v >= 0; --v) {
            if (!(support >> v & 1)) continue;
            size[v] = mono_exp(bound, v) + 1u;
            stride[v] = bits;
            if (bits > kKronMaxBits / size[v]) return false;
            bits *= size[v];
        }
        return true;
    }
    std::uint64_t encode(Mono m) const {
        std::uint64_t r = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (size[v]) r += mono_exp(m, v) * stride[v];
        return r;
    }
    Mono decode(std::uint64_t r) const {
        Mono m = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (size[v]) {
                m |= mono_var(v, static_cast<unsigned>(r / stride[v]));
                r %= stride[v];
            }
        return m;
    }
    // bit vector of p shifted down by encode(p.back())
    Bits encode_bits(const std::vector<Mono>& p, std::uint64_t& offset) const {
        offset = encode(p.back());
        Bits b;
        b.w.assign((encode(p.front()) - offset) / 64 + 1, 0);
        for (Mono m : p) {
            std::uint64_t e = encode(m) - offset;
            b.w[e / 64] |= std::uint64_t{1} << (e % 64);
        }
        return b;
    }
};

std::size_t span_words(const Kron& K, const std::vector<Mono>& p) {
    return static_cast<std::size_t>((K.encode(p.front()) - K.encode(p.back())) / 64 + 1);
}

std::optional<std::vector<Mono>> kron_mul(const std::vector<Mono>& a, const std::vector<Mono>& b, Mono bound,
                                          std::uint32_t support) {
    Kron K;
    if (!K.init(bound, support)) return std::nullopt;
    const std::vector<Mono>& rows = a.size() <= b.size() ? a : b;
    const std::vector<Mono>& other = a.size() <= b.size() ? b : a;
    // one shifted XOR of `other` per row, against a heap step per product
    double cost = static_cast<double>(rows.size()) * static_cast<double>(span_words(K, other)) +
                  static_cast<double>(K.bits) / 64;
    if (cost > 4.0 * static_cast<double>(a.size()) * static_cast<double>(b.size())) return std::nullopt;
    std::uint64_t off;
    Bits ob = K.encode_bits(other, off);
    Bits r;
    r.w.assign((K.encode(rows.front()) + K.encode(other.front())) / 64 + 2, 0);
    for (Mono m : rows) r.xor_shifted(ob, static_cast<int>(K.encode(m) + off));
    std::vector<Mono> out;
    for (std::size_t i = r.w.size(); i-- > 0;) {
        std::uint64_t x = r.w[i];
        while (x) {
            int hi = 63 - std::countl_zero(x);
            out.push_back(K.decode(i * 64 + static_cast<std::uint64_t>(hi)));
            x &= ~(std::uint64_t{1} << hi);
        }
    }
    return out;
}

// Exact quotient by long division of the Kronecker images.  Every quotient
// term must stay within deg(a) - deg(b); then no exponent wraps and the
// univariate identity a = q b lifts back.
enum class KronDiv { Exact, NotExact, Unsuitable };

KronDiv kron_div(const std::vector<Mono>& a, const std::vector<Mono>& b, Mono da, Mono db, std::uint32_t support,
                 std::vector<Mono>& q) {
    Kron K;
    if (!K.init(da, support)) return KronDiv::Unsuitable;
    if (static_cast<double>(span_words(K, a)) > 64.0 * static_cast<double>(a.size()) + 4096) return KronDiv::Unsuitable;
    const Mono limit = da - db;
    std::uint64_t boff, aoff;
    Bits bb = K.encode_bits(b, boff);
    Bits r = K.encode_bits(a, aoff);
    const std::uint64_t top_b = K.encode(b.front());
    if (K.encode(a.front()) < top_b) return KronDiv::NotExact;
    // work in absolute positions: bit i of r is z^(i + aoff)
    const std::uint64_t btop_rel = top_b - boff;
    for (std::size_t wi = r.w.size(); wi-- > 0;) {
        while (r.w[wi]) {
            int hi = 63 - std::countl_zero(r.w[wi]);
            std::uint64_t pos = wi * 64 + static_cast<std::uint64_t>(hi) + aoff;
            if (pos < top_b) return KronDiv::NotExact;
            Mono qt = K.decode(pos - top_b);
            if ((((limit | kHigh) - qt) & kHigh) != kHigh) return KronDiv::NotExact;
            q.push_back(qt);
            // place b's top bit on pos; b's lowest bit lands at pos - btop_rel >= aoff
            std::uint64_t low = pos - btop_rel;
            if (low < aoff) return KronDiv::NotExact;
            r.xor_shifted(bb, static_cast<int>(low - aoff));
        }
    }
    return KronDiv::Exact;
}

// Recent exact quotients: a gcd is verified by division and the caller then
// divides by it again.
struct QuotientMemo {
    static constexpr std::size_t kSlots = 16;
    struct Slot {
        std::size_t ha = 0, hb = 0;
        Poly a, b;
        std::optional<Poly> q;
    };
    Slot slots[kSlots];
    std::size_t next = 0;
};

thread_local QuotientMemo quotient_memo;

}  // namespace

Poly Poly::monomial(Mono m) {
    Poly p;
    p.t_.push_back(m);
    return p;
}

Poly Poly::from_terms(std::vector<Mono> t) {
    std::sort(t.begin(), t.end(), std::greater<>());
    Poly p;
    p.t_.reserve(t.size());
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if ((j - i) & 1) p.t_.push_back(t[i]);
        i = j;
    }
    return p;
}

std::uint32_t Poly::support() const {
    Mono acc = 0;
    for (Mono m : t_) acc |= m;
    std::uint32_t s = 0;
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(acc, v)) s |= 1u << v;
    return s;
}

unsigned Poly::degree(int v) const {
    unsigned d = 0;
    for (Mono m : t_) d = std::max(d, mono_exp(m, v));
    return d;
}

Mono Poly::min_exponents() const {
    if (t_.empty()) return 0;
    Mono r = t_[0];
    for (Mono m : t_) r = mono_min(r, m);
    return r;
}

Mono Poly::max_exponents() const {
    Mono r = 0;
    for (Mono m : t_) r = mono_max(r, m);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.t_.empty()) return b;
    if (b.t_.empty()) return a;
    Poly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        if (a.t_[i] > b.t_[j]) {
            r.t_.push_back(a.t_[i++]);
        } else if (a.t_[i] < b.t_[j]) {
            r.t_.push_back(b.t_[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    r.t_.insert(r.t_.end(), a.t_.begin() + i, a.t_.end());
    r.t_.insert(r.t_.end(), b.t_.begin() + j, b.t_.end());
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    check_exponents(a.max_exponents() + b.max_exponents());
    if (a.is_monomial()) return b.mul_mono(a.lead());
    if (b.is_monomial()) return a.mul_mono(b.lead());
    std::uint32_t s = a.support() | b.support();
    int v = single_var(s);
    if (v >= 0 && a.size() * b.size() > 32)
        return from_bits(bits_mul(to_bits(a, v), to_bits(b, v)), v);
    Poly r;
    Mono bound = a.max_exponents() + b.max_exponents();
    if (auto k = kron_mul(a.t_, b.t_, bound, s)) r.t_ = std::move(*k);
    else r.t_ = sparse_mul(a.t_, b.t_, bound);
    return r;
}

Poly Poly::mul_mono(Mono m) const {
    Poly r;
    r.t_.reserve(t_.size());
    for (Mono x : t_) r.t_.push_back(x + m);
    if (!t_.empty()) check_exponents(r.max_exponents());
    return r;
}

Poly Poly::div_mono(Mono m) const {
    Poly r;
    r.t_.reserve(t_.size());
    for (Mono x : t_) r.t_.push_back(x - m);
    return r;
}

Poly Poly::frobenius(int e) const {
    if (e == 0) return *this;
    Mono mx = max_exponents();
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(mx, v) > (kMaxExp >> e)) throw std::overflow_error("polynomial exponent overflow");
    Poly r;
    r.t_.reserve(t_.size());
    for (Mono x : t_) r.t_.push_back(x << e);
    return r;
}

std::optional<Poly> Poly::frobenius_root(int e) const {
    if (e == 0) return *this;
    Mono low = repeat16(static_cast<std::uint16_t>((1u << e) - 1));
    Poly r;
    r.t_.reserve(t_.size());
    for (Mono x : t_) {
        if (x & low) return std::nullopt;
        r.t_.push_back(x >> e);
    }
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = one(), b = *this;
    int sh = 0;
    while (k && !(k & 1)) {
        k >>= 1;
        ++sh;
    }
    b = b.frobenius(sh);
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return Poly{};
    if (b.is_one()) return *this;
    if (b.is_monomial()) {
        Mono m = b.lead();
        for (Mono x : t_)
            if (!mono_divides(m, x)) return std::nullopt;
        return div_mono(m);
    }
    std::uint32_t sa = support(), sb = b.support();
    if ((sb & ~sa) != 0) return std::nullopt;
    int v = single_var(sa);
    if (v >= 0) {
        Bits r = to_bits(*this, v), q;
        bits_divmod(r, to_bits(b, v), &q);
        if (r.deg() >= 0) return std::nullopt;
        q.trim();
        return from_bits(q, v);
    }
    if (size() * b.size() < 4096) return divide_sparse(b);
    std::size_t ha = hash(), hb = b.hash();
    auto& memo = quotient_memo;
    for (const auto& slot : memo.slots)
        if (slot.ha == ha && slot.hb == hb && slot.a == *this && slot.b == b) return slot.q;
    std::optional<Poly> q = divide_sparse(b);
    auto& slot = memo.slots[memo.next];
    memo.next = (memo.next + 1) % QuotientMemo::kSlots;
    slot = {ha, hb, *this, b, q};
    return q;
}

std::optional<Poly> Poly::divide_sparse(const Poly& b) const {
    Mono da = max_exponents(), db = b.max_exponents();
    if (!mono_divides(db, da)) return std::nullopt;
    std::vector<Mono> kq;
    switch (kron_div(t_, b.t_, da, db, support(), kq)) {
        case KronDiv::NotExact: return std::nullopt;
        case KronDiv::Exact: {
            Poly r;
            r.t_ = std::move(kq);
            return r;
        }
        case KronDiv::Unsuitable: break;
    }
    auto q = sparse_div(t_, b.t_);
    if (!q) return std::nullopt;
    Poly r;
    r.t_ = std::move(*q);
    return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) s += " + ";
        Mono m = t_[i];
        if (m == 0) {
            s += "1";
            continue;
        }
        bool first = true;
        for (int v = 0; v < kMaxVars; ++v) {
            unsigned e = mono_exp(m, v);
            if (!e) continue;
            if (!first) s += "*";
            first = false;
            s += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

std::size_t Poly::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Mono m : t_) {
        auto lo = static_cast<std::uint64_t>(m), hi = static_cast<std::uint64_t>(m >> 64);
        h ^= lo + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Mono ma = a.min_exponents(), mb = b.min_exponents();
    Mono m = mono_min(ma, mb);
    Poly g = gcd_nomono(ma ? a.div_mono(ma) : a, mb ? b.div_mono(mb) : b);
    return m ? g.mul_mono(m) : g;
}

}  // namespace bcn
