// Rational functions over F2 in canonical reduced form.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcn/poly.hpp"

namespace bcn {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// num/den with gcd(num, den) = 1 and den != 0.  Over F2 every nonzero
/// polynomial is monic, so coprimality alone makes the form unique.
class RatFunc {
public:
    RatFunc() : den_(Poly::one()) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one()) {}  // NOLINT implicit
    RatFunc(const Poly& n, const Poly& d);

    static RatFunc zero() { return {}; }
    static RatFunc one() { return RatFunc(Poly::one()); }
    static RatFunc var(int v, unsigned e = 1) { return RatFunc(Poly::var(v, e)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + b; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc operator-() const { return *this; }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        return a.num_ < b.num_ || (a.num_ == b.num_ && a.den_ < b.den_);
    }

    RatFunc inv() const;
    RatFunc sq() const { return frobenius(1); }
    RatFunc frobenius(int e) const { return {num_.frobenius(e), den_.frobenius(e), Canonical{}}; }
    RatFunc pow(int k) const;

    std::string to_string(const std::vector<std::string>& names) const;
    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    struct Canonical {};
    RatFunc(Poly n, Poly d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}

    Poly num_;
    Poly den_;
};

}  // namespace bcn
