#include "bcn/ratfunc.hpp"

namespace bcn {

RatFunc::RatFunc(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (d.is_one()) {
        num_ = n;
        den_ = d;
        return;
    }
    Poly g = gcd(n, d);
    if (g.is_one()) {
        num_ = n;
        den_ = d;
    } else {
        num_ = *n.divide_exact(g);
        den_ = *d.divide_exact(g);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (b.den_.is_one()) return {a.num_ + b.num_ * a.den_, a.den_, RatFunc::Canonical{}};
    if (a.den_.is_one()) return {a.num_ * b.den_ + b.num_, b.den_, RatFunc::Canonical{}};
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one())
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Canonical{}};
    Poly ad = *a.den_.divide_exact(g), bd = *b.den_.divide_exact(g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        Poly g = gcd(an, bd);
        if (!g.is_one()) {
            an = *an.divide_exact(g);
            bd = *bd.divide_exact(g);
        }
    }
    if (!ad.is_one()) {
        Poly g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = *bn.divide_exact(g);
            ad = *ad.divide_exact(g);
        }
    }
    return {an * bn, ad * bd, RatFunc::Canonical{}};
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero();
    return {den_, num_, Canonical{}};
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    return {num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Canonical{}};
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
    std::string n = num_.to_string(names);
    if (den_.is_one()) return n;
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string(names);
    if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace bcn
