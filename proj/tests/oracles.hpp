// Independent reference computations used by the tests.  Nothing here calls
// into the linear algebra of the library.
#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

/// [k(K^(2^j)) : k] for K = k(t_1^(1/2^a_1), ..., t_m^(1/2^a_m)), counted on
/// exponents: the field is generated by t_i^(2^j / 2^a_i), which is a new
/// element only while j < a_i.
inline std::uint64_t monomial_field_degree(const std::vector<int>& a, int j) {
    std::uint64_t d = 1;
    for (int ai : a)
        if (ai > j) d <<= (ai - j);
    return d;
}

/// Univariate F2 polynomials as bit masks (bit i = coefficient of x^i).
inline int bit_degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

inline std::uint64_t bit_mod(std::uint64_t a, std::uint64_t b) {
    while (a && bit_degree(a) >= bit_degree(b)) a ^= b << (bit_degree(a) - bit_degree(b));
    return a;
}

inline std::uint64_t bit_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = bit_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

inline std::uint64_t bit_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i)
        if (b >> i & 1) r ^= a << i;
    return r;
}

}  // namespace oracle
