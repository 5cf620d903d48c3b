#include "bcn/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcn {

Root Root::operator-() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    if (a.c.size() != b.c.size()) throw std::invalid_argument("rank mismatch");
    Root r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Root operator*(int k, const Root& a) {
    Root r = a;
    for (int& x : r.c) x *= k;
    return r;
}

std::string Root::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

Root Root::eps(int n, int i, int sign) {
    Root r{std::vector<int>(n, 0)};
    r.c.at(i - 1) = sign;
    return r;
}

int inner(const Root& a, const Root& b) {
    return std::inner_product(a.c.begin(), a.c.end(), b.c.begin(), 0);
}

bool is_root(const Root& a) {
    int nz = 0, l1 = 0;
    for (int x : a.c) {
        if (x) ++nz;
        l1 += std::abs(x);
        if (std::abs(x) > 2) return false;
    }
    if (nz == 1) return l1 == 1 || l1 == 2;
    return nz == 2 && l1 == 2;
}

RootLength length_of(const Root& a) {
    if (!is_root(a)) throw UnknownRoot("not a root of BC_n: " + a.to_string());
    int q = inner(a, a);
    if (q == 1) return RootLength::VeryShort;
    if (q == 2) return RootLength::Short;
    return RootLength::Long;
}

int height(const Root& a) {
    int n = a.rank(), h = 0;
    for (int i = 0; i < n; ++i) h += a.c[i] * (n - i);
    return h;
}

bool is_positive(const Root& a) { return height(a) > 0; }

int pairing(const Root& b, const Root& a) {
    int aa = inner(a, a);
    if (aa == 0) throw std::invalid_argument("pairing against zero");
    int num = 2 * inner(b, a);
    if (num % aa) throw std::invalid_argument("non-integral pairing");
    return num / aa;
}

std::vector<Root> all_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int s : {1, -1}) {
            out.push_back(Root::eps(n, i, s));
            out.push_back(2 * Root::eps(n, i, s));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) out.push_back(Root::eps(n, i, si) + Root::eps(n, j, sj));
    return out;
}

std::vector<Root> positive_roots_in_order(int n) {
    std::vector<Root> out;
    for (int i = n; i >= 1; --i) {
        out.push_back(Root::eps(n, i));
        out.push_back(2 * Root::eps(n, i));
    }
    std::vector<Root> sh;
    for (const Root& a : all_roots(n))
        if (length_of(a) == RootLength::Short && is_positive(a)) sh.push_back(a);
    std::sort(sh.begin(), sh.end(), [](const Root& a, const Root& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a > b;
    });
    out.insert(out.end(), sh.begin(), sh.end());
    return out;
}

std::vector<Root> simple_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i < n; ++i) out.push_back(Root::eps(n, i) + Root::eps(n, i + 1, -1));
    out.push_back(Root::eps(n, n));
    return out;
}

WeylElement WeylElement::identity(int n) {
    WeylElement w;
    w.perm_.resize(n);
    std::iota(w.perm_.begin(), w.perm_.end(), 0);
    w.sign_.assign(n, 1);
    return w;
}

WeylElement WeylElement::signed_permutation(std::vector<int> perm, std::vector<int> sign) {
    int n = static_cast<int>(perm.size());
    if (static_cast<int>(sign.size()) != n) throw std::invalid_argument("sign/perm size mismatch");
    std::vector<int> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || seen[perm[i]]++) throw std::invalid_argument("not a permutation");
        if (sign[i] != 1 && sign[i] != -1) throw std::invalid_argument("sign must be +-1");
    }
    WeylElement w;
    w.perm_ = std::move(perm);
    w.sign_ = std::move(sign);
    return w;
}

WeylElement WeylElement::simple(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
    WeylElement w = identity(n);
    if (i < n) std::swap(w.perm_[i - 1], w.perm_[i]);
    else w.sign_[n - 1] = -1;
    return w;
}

WeylElement WeylElement::longest(int n) {
    WeylElement w = identity(n);
    w.sign_.assign(n, -1);
    return w;
}

WeylElement WeylElement::from_word(int n, const std::vector<int>& word) {
    WeylElement w = identity(n);
    for (int i : word) w = w * simple(n, i);
    return w;
}

Root WeylElement::act(const Root& a) const {
    Root r{std::vector<int>(a.c.size(), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[perm_[i]] += sign_[i] * a.c[i];
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement w;
    int n = rank();
    w.perm_.resize(n);
    w.sign_.resize(n);
    for (int i = 0; i < n; ++i) {
        w.perm_[i] = perm_[o.perm_[i]];
        w.sign_[i] = o.sign_[i] * sign_[o.perm_[i]];
    }
    return w;
}

WeylElement WeylElement::inverse() const {
    WeylElement w;
    int n = rank();
    w.perm_.resize(n);
    w.sign_.resize(n);
    for (int i = 0; i < n; ++i) {
        w.perm_[perm_[i]] = i;
        w.sign_[perm_[i]] = sign_[i];
    }
    return w;
}

bool WeylElement::is_identity() const { return *this == identity(rank()); }

std::vector<int> WeylElement::reduced_word() const {
    int n = rank();
    auto simple_r = simple_roots(n);
    std::vector<int> word;
    WeylElement w = *this;
    while (!w.is_identity()) {
        WeylElement winv = w.inverse();
        int i = 1;
        while (is_positive(winv.act(simple_r[i - 1]))) ++i;
        word.push_back(i);
        w = simple(n, i) * w;
    }
    return word;
}

int WeylElement::length() const { return static_cast<int>(inversion_set_reduced(*this).size()); }

std::string WeylElement::to_string() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) s += (i ? "," : "") + std::to_string(sign_[i] * (perm_[i] + 1));
    return s + ")";
}

std::vector<Root> inversion_set(const WeylElement& w) {
    std::vector<Root> out;
    for (const Root& a : positive_roots_in_order(w.rank()))
        if (!is_positive(w.act(a))) out.push_back(a);
    return out;
}

std::vector<Root> inversion_set_reduced(const WeylElement& w) {
    std::vector<Root> out;
    for (const Root& a : inversion_set(w))
        if (length_of(a) != RootLength::Long) out.push_back(a);
    return out;
}

std::vector<WeylElement> weyl_group(int n) {
    std::vector<WeylElement> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> s(n);
            for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
            out.push_back(WeylElement::signed_permutation(p, s));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace bcn
