#include "bcn/tower.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gf63.hpp"

namespace bcn {

namespace {

// Multiply a spanning set over level `from` by the monomial basis of
// level `from` over level `to`, giving a spanning set over level `to`.
std::vector<Elem> lift_span(const Tower& T, const std::vector<Elem>& span, int from, int to) {
    if (to <= from) return span;
    std::vector<Mono> mons{0};
    for (int v = 0; v < T.nvars(); ++v) {
        unsigned step = 1u << (T.root_exp(v) + from);
        unsigned count = 1u << (to - from);
        std::vector<Mono> next;
        for (Mono m : mons)
            for (unsigned d = 0; d < count; ++d) next.push_back(m + mono_var(v, d * step));
        mons = std::move(next);
    }
    std::vector<Elem> out;
    out.reserve(span.size() * mons.size());
    for (const Elem& x : span)
        for (Mono m : mons) out.push_back(x * RatFunc(Poly::monomial(m)));
    return out;
}

class Parser {
public:
    Parser(const Tower& T, const std::string& s) : T_(T), s_(s) {}

    Elem run() {
        Elem x = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return x;
    }

private:
    const Tower& T_;
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + s_ + "': " + what + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
        long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_++] - '0');
            if (v > (1 << 20)) fail("integer too large");
        }
        return neg ? -v : v;
    }
    Elem expr() {
        Elem x = term();
        while (true) {
            if (eat('+') || eat('-')) x += term();
            else return x;
        }
    }
    Elem term() {
        Elem x = power();
        while (true) {
            if (eat('*')) {
                x *= power();
            } else if (eat('/')) {
                Elem d = power();
                if (d.is_zero()) fail("division by zero");
                x /= d;
            } else {
                return x;
            }
        }
    }
    Elem power() {
        int var = -1;
        Elem base = primary(var);
        if (!eat('^')) return base;
        long p = 1, q = 1;
        if (eat('(')) {
            p = integer();
            if (eat('/')) q = integer();
            if (!eat(')')) fail("expected ')'");
        } else {
            p = integer();
        }
        if (q <= 0 || (q & (q - 1))) fail("exponent denominator must be a power of two");
        int j = std::countr_zero(static_cast<unsigned long>(q));
        if (p < 0 && base.is_zero()) fail("division by zero");
        if (var >= 0) {
            int e = T_.root_exp(var);
            if (j > e) fail("root not present in tower");
            long ex = p * (1L << (e - j));
            Elem r = RatFunc::var(var, static_cast<unsigned>(std::labs(ex)));
            return ex < 0 ? r.inv() : r;
        }
        Elem r = base;
        for (int k = 0; k < j; ++k) {
            auto s = T_.try_sqrt(r);
            if (!s) fail("root not present in tower");
            r = *s;
        }
        return r.pow(static_cast<int>(p));
    }
    Elem primary(int& var) {
        skip();
        if (eat('(')) {
            Elem x = expr();
            if (!eat(')')) fail("expected ')'");
            return x;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            long v = integer();
            return (v & 1) ? Elem::one() : Elem::zero();
        }
        std::size_t st = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (st == i_) fail("unexpected character");
        std::string name = s_.substr(st, i_ - st);
        var = T_.index_of(name);
        if (var < 0) fail("unknown variable '" + name + "'");
        return T_.t(var);
    }
};

std::string fraction(unsigned r, int e) {
    unsigned d = 1u << e;
    unsigned g = std::gcd(r, d);
    r /= g;
    d /= g;
    if (d == 1) return r == 1 ? "" : "^" + std::to_string(r);
    return "^(" + std::to_string(r) + "/" + std::to_string(d) + ")";
}

bool generic_full_rank(const Tower& T, const std::vector<Elem>& xs, int level);
bool cheap_coords(const Tower& T, const Elem& x, int level);

}  // namespace

Tower::Tower(std::vector<std::string> names, std::vector<int> root_exp)
    : names_(std::move(names)), exp_(std::move(root_exp)) {
    if (names_.empty()) throw std::invalid_argument("tower needs at least one variable");
    if (names_.size() != exp_.size()) throw std::invalid_argument("root exponent list has wrong length");
    if (names_.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    for (int e : exp_)
        if (e < 0 || e > 8) throw std::invalid_argument("root exponent out of range");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
}

TowerPtr make_tower(std::vector<std::string> names, std::vector<int> root_exp) {
    return std::make_shared<const Tower>(std::move(names), std::move(root_exp));
}

int Tower::index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

std::shared_ptr<const Tower> Tower::with_symbols(const std::vector<std::string>& extra) const {
    auto n = names_;
    auto e = exp_;
    for (const auto& x : extra) {
        n.push_back(x);
        e.push_back(0);
    }
    return make_tower(std::move(n), std::move(e));
}

std::size_t Tower::dim(int level) const {
    int s = 0;
    for (int v = 0; v < nvars(); ++v) s += residue_bits(v, level);
    return std::size_t{1} << s;
}

std::vector<Mono> Tower::basis(int level) const {
    std::vector<Mono> out{0};
    for (int v = 0; v < nvars(); ++v) {
        unsigned c = 1u << residue_bits(v, level);
        std::vector<Mono> next;
        next.reserve(out.size() * c);
        for (Mono m : out)
            for (unsigned r = 0; r < c; ++r) next.push_back(m + mono_var(v, r));
        out = std::move(next);
    }
    return out;
}

Elem Tower::root(int i, int j, unsigned p) const {
    if (j > exp_[i]) throw NoSquareRootInTower();
    return RatFunc::var(i, p << (exp_[i] - j));
}

Elem Tower::parse(const std::string& s) const { return Parser(*this, s).run(); }

std::string Tower::basis_name(Mono m) const {
    std::string s;
    for (int v = 0; v < nvars(); ++v) {
        unsigned r = mono_exp(m, v);
        if (!r) continue;
        if (!s.empty()) s += "*";
        s += names_[v] + fraction(r, exp_[v]);
    }
    return s.empty() ? "1" : s;
}

std::string Tower::base_to_string(const Elem& x) const {
    auto lower = [&](const Poly& p) {
        std::vector<Mono> t;
        for (Mono m : p.terms()) {
            Mono r = 0;
            for (int v = 0; v < nvars(); ++v) r += mono_var(v, mono_exp(m, v) >> exp_[v]);
            t.push_back(r);
        }
        return Poly::from_terms(std::move(t));
    };
    return RatFunc(lower(x.num()), lower(x.den())).to_string(names_);
}

std::string Tower::to_string(const Elem& x) const {
    if (x.is_zero()) return "0";
    auto c = coords(x, 0);
    auto B = basis(0);
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = base_to_string(c[i]);
        bool compound = cs.find_first_of("+/") != std::string::npos;
        if (B[i] == 0) {
            s += cs;
        } else if (c[i].is_one()) {
            s += basis_name(B[i]);
        } else {
            s += (compound ? "(" + cs + ")" : cs) + "*" + basis_name(B[i]);
        }
    }
    return s;
}

std::vector<Elem> Tower::coords_projective(const Elem& x, int level) const {
    std::size_t D = dim(level);
    std::vector<Elem> out(D);
    if (x.is_zero()) return out;
    const Poly& g = x.den();
    int E = 0;
    std::uint32_t sup = g.support();
    for (int v = 0; v < nvars(); ++v)
        if (sup >> v & 1) E = std::max(E, residue_bits(v, level));
    Poly num = x.num();
    for (int j = 0; j < E; ++j) num = num * g.frobenius(j);
    std::vector<std::vector<Mono>> buckets(D);
    for (Mono m : num.terms()) {
        std::size_t idx = 0;
        Mono r = 0;
        for (int v = 0; v < nvars(); ++v) {
            unsigned c = 1u << residue_bits(v, level);
            unsigned rv = mono_exp(m, v) & (c - 1);
            idx = idx * c + rv;
            r += mono_var(v, rv);
        }
        buckets[idx].push_back(m - r);
    }
    for (std::size_t i = 0; i < D; ++i)
        if (!buckets[i].empty()) out[i] = Elem(Poly::from_terms(std::move(buckets[i])));
    return out;
}

std::vector<Elem> Tower::coords(const Elem& x, int level) const {
    auto c = coords_projective(x, level);
    const Poly& g = x.den();
    if (g.is_one()) return c;
    int E = 0;
    std::uint32_t sup = g.support();
    for (int v = 0; v < nvars(); ++v)
        if (sup >> v & 1) E = std::max(E, residue_bits(v, level));
    Elem d = Elem(g.frobenius(E)).inv();
    for (auto& e : c)
        if (!e.is_zero()) e *= d;
    return c;
}

Elem Tower::from_coords(const std::vector<Elem>& c, int level) const {
    auto B = basis(level);
    Elem x;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) x += c[i] * Elem(Poly::monomial(B[i]));
    return x;
}

bool Tower::in_level(const Elem& x, int level) const {
    auto ok = [&](const Poly& p) {
        for (Mono m : p.terms())
            for (int v = 0; v < nvars(); ++v)
                if (mono_exp(m, v) & ((1u << residue_bits(v, level)) - 1)) return false;
        return true;
    };
    return ok(x.num()) && ok(x.den());
}

std::optional<Elem> Tower::try_sqrt(const Elem& x) const {
    auto n = x.num().frobenius_root(1);
    auto d = x.den().frobenius_root(1);
    if (!n || !d) return std::nullopt;
    return Elem(*n, *d);
}

Elem Tower::sqrt(const Elem& x) const {
    auto r = try_sqrt(x);
    if (!r) throw NoSquareRootInTower();
    return *r;
}

Elem Tower::random_scalar(Rng& rng, int level, int terms, int maxdeg) const {
    std::vector<Mono> t;
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(terms));
    for (int i = 0; i < n; ++i) {
        Mono m = 0;
        for (int v = 0; v < nvars(); ++v) {
            unsigned a = static_cast<unsigned>(rng() % static_cast<unsigned>(maxdeg + 1));
            m += mono_var(v, a << residue_bits(v, level));
        }
        t.push_back(m);
    }
    return Elem(Poly::from_terms(std::move(t)));
}

Elem Tower::random_element(Rng& rng, int terms, int maxdeg) const {
    for (;;) {
        std::vector<Mono> t;
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(terms));
        for (int i = 0; i < n; ++i) {
            Mono m = 0;
            for (int v = 0; v < nvars(); ++v) {
                unsigned top = static_cast<unsigned>(maxdeg + 1) << exp_[v];
                m += mono_var(v, static_cast<unsigned>(rng() % top));
            }
            t.push_back(m);
        }
        Elem x(Poly::from_terms(std::move(t)));
        if (!x.is_zero()) return x;
    }
}

// ---- Echelon ----------------------------------------------------------------

std::vector<Elem> Echelon::reduce(std::vector<Elem> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Elem c = v[piv_[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
    }
    return v;
}

bool Echelon::contains(const std::vector<Elem>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Elem& e) { return e.is_zero(); });
}

bool Echelon::insert(std::vector<Elem> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    Elem s = v[p].inv();
    for (auto& e : v)
        if (!e.is_zero()) e *= s;
    for (auto& row : rows_) {
        Elem c = row[p];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) row[j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

std::optional<std::vector<Elem>> Echelon::solve(const std::vector<Elem>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<Elem> a(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) a[r] = v[piv_[r]];
    return a;
}

// ---- Subspace ---------------------------------------------------------------

Subspace::Subspace(TowerPtr tower, ScalarField scalars, std::vector<Elem> basis)
    : tower_(std::move(tower)), scalars_(std::move(scalars)), basis_(std::move(basis)),
      ech_(tower_->dim(scalars_.level)) {
    for (const Elem& b : basis_)
        for (const Elem& f : scalars_.span) {
            Elem x = b * f;
            if (x.is_zero()) continue;
            if (ech_.insert(tower_->coords_projective(x, scalars_.level))) span_.push_back(x);
        }
}

std::vector<Elem> Subspace::span_at_level(int L) const {
    return lift_span(*tower_, span_, scalars_.level, L);
}

bool Subspace::contains(const Elem& x) const {
    if (x.is_zero()) return true;
    if (cheap_coords(*tower_, x, scalars_.level)) return ech_.contains(tower_->coords_projective(x, scalars_.level));
    std::vector<Elem> xs = span_;
    xs.push_back(x);
    return !generic_full_rank(*tower_, xs, scalars_.level);
}

bool Subspace::closed_under(const ScalarField& F) const {
    int L = std::max(level(), F.level);
    auto mine = span_at_level(L);
    auto theirs = lift_span(*tower_, F.span, F.level, L);
    for (const Elem& b : mine)
        for (const Elem& f : theirs)
            if (!contains(b * f)) return false;
    return true;
}

Subspace Subspace::scaled(const Elem& lambda) const {
    std::vector<Elem> b;
    for (const Elem& x : basis_) b.push_back(lambda * x);
    return Subspace(tower_, scalars_, std::move(b));
}

Elem Subspace::random(Rng& rng, bool nonzero, int terms, int maxdeg) const {
    if (span_.empty()) {
        if (nonzero) throw std::invalid_argument("random nonzero element of the zero space");
        return {};
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        Elem x;
        std::size_t picks = 1 + rng() % std::min<std::size_t>(3, span_.size());
        for (std::size_t i = 0; i < picks; ++i)
            x += tower_->random_scalar(rng, level(), terms, maxdeg) * span_[rng() % span_.size()];
        if (!nonzero || !x.is_zero()) return x;
    }
    return span_[0];
}

Elem Subspace::random_outside(Rng& rng, const Subspace& outer) const {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Elem x = outer.random(rng, true);
        if (!contains(x)) return x;
    }
    for (const Elem& x : outer.span_at_level(level()))
        if (!contains(x)) return x;
    throw std::invalid_argument("subspace contains the whole ambient space");
}

Subspace coarsen(const Subspace& S) {
    if (S.level() == 0) return S;
    ScalarField k = base_scalars(S.tower());
    if (!S.closed_under(k)) return S;
    return Subspace(S.tower(), k, S.level_span());
}

std::size_t dim_of_sum(const std::vector<const Subspace*>& spaces, int level) {
    if (spaces.empty()) return 0;
    const Tower& T = *spaces.front()->tower();
    Echelon e(T.dim(level));
    for (const Subspace* s : spaces)
        for (const Elem& x : s->span_at_level(level)) e.insert(T.coords_projective(x, level));
    return e.rank();
}

namespace {

// Exact elimination over k blows up on large coordinates, so the rank of a
// family is compared with its expected value at random points of GF(2^63).
// Full rank at one point is a proof; deficiency at three independent points
// is taken as deficiency.
bool generic_full_rank(const Tower& T, const std::vector<Elem>& xs, int level) {
    if (xs.size() > T.dim(level)) return false;
    std::vector<int> bits;
    for (int v = 0; v < T.nvars(); ++v) bits.push_back(T.residue_bits(v, level));
    std::vector<gf63::ResidueRow> rows;
    std::uint64_t seed = 0x5eed;
    for (const Elem& x : xs) {
        int e = 0;
        std::uint32_t sup = x.den().support();
        for (int v = 0; v < T.nvars(); ++v)
            if (sup >> v & 1) e = std::max(e, bits[static_cast<std::size_t>(v)]);
        rows.push_back({&x.num(), &x.den(), e});
        seed = seed * 1000003u ^ x.num().hash() ^ (x.den().hash() << 1);
    }
    int deficient = 0;
    for (std::uint64_t trial = 0; deficient < 3 && trial < 12; ++trial) {
        auto r = gf63::residue_rank(rows, bits, seed + trial);
        if (!r) continue;  // a denominator vanished at this point
        if (*r == xs.size()) return true;
        ++deficient;
    }
    return false;
}

// Exact coordinates cost about |num| * |den|^(2^e - 1) terms.
bool cheap_coords(const Tower& T, const Elem& x, int level) {
    if (x.den().is_one()) return x.num().size() <= 4096;
    int e = 0;
    std::uint32_t sup = x.den().support();
    for (int v = 0; v < T.nvars(); ++v)
        if (sup >> v & 1) e = std::max(e, T.residue_bits(v, level));
    double cost = static_cast<double>(x.num().size());
    for (int j = 0; j < (1 << e) - 1; ++j) cost *= static_cast<double>(x.den().size());
    return cost <= 4096;
}

}  // namespace

bool intersect_trivially(const Subspace& a, const Subspace& b) {
    int L = std::max(a.level(), b.level());
    // both spans are bases at level L, so a ∩ b = 0 iff their union is independent
    std::vector<Elem> xs = a.span_at_level(L);
    for (const Elem& x : b.span_at_level(L)) xs.push_back(x);
    return generic_full_rank(*a.tower(), xs, L);
}

bool meets_scaled(const Subspace& W, const Elem& c) {
    if (c.is_zero() || W.is_zero()) return false;
    std::vector<Elem> xs = W.level_span();
    for (const Elem& x : W.level_span()) xs.push_back(c * x);
    return !generic_full_rank(*W.tower(), xs, W.level());
}

// ---- Subfield ---------------------------------------------------------------

Subfield Subfield::generated(TowerPtr tower, const std::vector<Elem>& generators) {
    Subfield F;
    F.tower_ = std::move(tower);
    F.ech_ = Echelon(F.tower_->dim(0));
    F.ech_.insert(F.tower_->coords_projective(Elem::one(), 0));
    F.basis_.push_back(Elem::one());
    std::vector<Elem> gens;
    for (const Elem& g : generators)
        if (!g.is_zero() && !F.contains(g)) gens.push_back(g);
    for (std::size_t i = 0; i < F.basis_.size(); ++i) {
        for (const Elem& g : gens) {
            Elem p = F.basis_[i] * g;
            if (F.ech_.insert(F.tower_->coords_projective(p, 0))) F.basis_.push_back(p);
        }
    }
    return F;
}

bool Subfield::contains(const Elem& x) const {
    if (x.is_zero()) return true;
    if (cheap_coords(*tower_, x, 0)) return ech_.contains(tower_->coords_projective(x, 0));
    std::vector<Elem> xs = basis_;
    xs.push_back(x);
    return !generic_full_rank(*tower_, xs, 0);
}

bool Subfield::contains(const Subfield& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Elem& x) { return contains(x); });
}

ScalarField Subfield::squares(const std::string& name) const {
    ScalarField s{name, 1, {}};
    for (const Elem& b : basis_) s.span.push_back(b.sq());
    return s;
}

Elem Subfield::inverse_by_solve(const Elem& x) const {
    if (x.is_zero()) throw DivisionByZero();
    // columns: coordinates of x*b_j; solve sum y_j x b_j = 1 by elimination
    const std::size_t D = tower_->dim(0), n = basis_.size();
    std::vector<std::vector<Elem>> M(D, std::vector<Elem>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        auto c = tower_->coords(x * basis_[j], 0);
        for (std::size_t i = 0; i < D; ++i) M[i][j] = c[i];
    }
    auto one = tower_->coords(Elem::one(), 0);
    for (std::size_t i = 0; i < D; ++i) M[i][n] = one[i];
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < D; ++c) {
        std::size_t p = r;
        while (p < D && M[p][c].is_zero()) ++p;
        if (p == D) continue;
        std::swap(M[p], M[r]);
        Elem s = M[r][c].inv();
        for (auto& e : M[r]) e *= s;
        for (std::size_t i = 0; i < D; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            Elem f = M[i][c];
            for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < D; ++i)
        if (!M[i][n].is_zero()) throw std::domain_error("element not invertible inside subfield");
    Elem y;
    for (std::size_t i = 0; i < r; ++i) y += M[i][n] * basis_[pivcol[i]];
    return y;
}

Elem Subfield::random(Rng& rng, bool nonzero, int terms, int maxdeg) const {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Elem x;
        std::size_t picks = 1 + rng() % std::min<std::size_t>(3, basis_.size());
        for (std::size_t i = 0; i < picks; ++i)
            x += tower_->random_scalar(rng, 0, terms, maxdeg) * basis_[rng() % basis_.size()];
        if (!nonzero || !x.is_zero()) return x;
    }
    return Elem::one();
}

Subspace Subfield::as_subspace() const { return Subspace(tower_, base_scalars(tower_), basis_); }

ScalarField base_scalars(const TowerPtr&) { return {"k", 0, {Elem::one()}}; }

Subfield subfield_generated_by_ratios(const Subspace& S) {
    auto span = S.level_span();
    if (span.empty()) throw std::invalid_argument("ratios of the zero space");
    std::vector<Elem> gens;
    for (std::size_t j = 1; j < span.size(); ++j) gens.push_back(span[j] / span[0]);
    return Subfield::generated(S.tower(), gens);
}

int two_adic_valuation(std::uint64_t x) { return x ? std::countr_zero(x) : -1; }

Subfield frobenius_shifted_subfield(const Subfield& F, std::uint64_t lambda) {
    if (lambda == 0) return Subfield::base(F.tower());
    int v = two_adic_valuation(lambda);
    std::vector<Elem> gens;
    for (const Elem& b : F.basis()) gens.push_back(b.frobenius(v));
    return Subfield::generated(F.tower(), gens);
}

Subfield compositum(const std::vector<Subfield>& fields) {
    if (fields.empty()) throw std::invalid_argument("compositum of no fields");
    std::vector<Elem> gens;
    for (const auto& F : fields)
        for (const Elem& b : F.basis()) gens.push_back(b);
    return Subfield::generated(fields.front().tower(), gens);
}

}  // namespace bcn
