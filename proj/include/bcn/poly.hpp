// Sparse multivariate polynomials over the two-element field.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bcn {

/// Packed exponent vector: up to kMaxVars variables, 16 bits each, variable 0
/// in the most significant field.  Comparing two Mono values as integers is
/// the lexicographic order with x0 > x1 > ...
using Mono = unsigned __int128;

inline constexpr int kMaxVars = 8;
inline constexpr int kExpBits = 16;
inline constexpr unsigned kMaxExp = 0x7FFF;

inline unsigned mono_exp(Mono m, int v) {
    return static_cast<unsigned>((m >> (kExpBits * (kMaxVars - 1 - v))) & 0xFFFF);
}
inline Mono mono_var(int v, unsigned e) {
    return static_cast<Mono>(e) << (kExpBits * (kMaxVars - 1 - v));
}
bool mono_divides(Mono a, Mono b);  // a | b
Mono mono_min(Mono a, Mono b);
Mono mono_max(Mono a, Mono b);
unsigned mono_total_degree(Mono m);

class Poly {
public:
    Poly() = default;

    static Poly one() { return monomial(0); }
    static Poly monomial(Mono m);
    static Poly var(int v, unsigned e = 1) { return monomial(mono_var(v, e)); }
    /// Sorts and cancels repeated monomials (coefficients live in F2).
    static Poly from_terms(std::vector<Mono> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0] == 0; }
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t size() const { return t_.size(); }
    const std::vector<Mono>& terms() const { return t_; }
    Mono lead() const { return t_.front(); }

    /// Bit v set iff variable v occurs.
    std::uint32_t support() const;
    unsigned degree(int v) const;
    Mono min_exponents() const;
    Mono max_exponents() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.t_ != b.t_; }
    /// Total order used only for hashing/sorting containers.
    friend bool operator<(const Poly& a, const Poly& b) { return a.t_ < b.t_; }

    Poly mul_mono(Mono m) const;
    Poly div_mono(Mono m) const;  // requires m | every term
    /// p^(2^e); cheap in characteristic 2.
    Poly frobenius(int e = 1) const;
    /// Inverse of frobenius when every exponent is divisible by 2^e.
    std::optional<Poly> frobenius_root(int e = 1) const;
    Poly pow(unsigned k) const;

    /// Exact quotient a / b, or nullopt if b does not divide a.
    std::optional<Poly> divide_exact(const Poly& b) const;

    std::string to_string(const std::vector<std::string>& names) const;

    std::size_t hash() const;

private:
    std::optional<Poly> divide_sparse(const Poly& b) const;
    std::vector<Mono> t_;  // strictly decreasing
};

Poly gcd(const Poly& a, const Poly& b);

}  // namespace bcn
