// Polynomial gcd by evaluation at points of GF(2^63) = F2[x]/(x^63 + x + 1).
// Private to the library.
#pragma once

#include <optional>
#include <vector>

#include "bcn/poly.hpp"

namespace bcn::gf63 {

/// For each variable v in `vars`: the degree in v of the gcd of a and b after
/// specializing every other variable at a random point, or -1 if a leading
/// coefficient vanished there.  The true gcd has at most this degree in v;
/// 0 proves that v does not occur in it.  Stops at the first 0.
std::vector<int> image_gcd_degrees(const Poly& a, const Poly& b, std::uint32_t vars);

/// gcd(a, b) by dense interpolation, one variable at a time.  The result is
/// checked by exact division; nullopt if every attempt failed that check.
std::optional<Poly> dense_gcd(const Poly& a, const Poly& b, std::uint32_t vars);

/// Rank of a matrix of polynomials after substituting a random point of
/// GF(2^63) for every variable.  Never exceeds the rank over F2(x1, ..., x8)
/// and equals it except with probability at most (total degree) / 2^63.
std::size_t specialized_rank(const std::vector<std::vector<Poly>>& rows, std::uint64_t seed);

/// One row num * den^(2^e - 1), read in the residue basis of exponent widths 2^bits[v].
struct ResidueRow {
    const Poly* num;
    const Poly* den;
    int e;
};

/// Rank of the rows' residue coordinates at a random point of GF(2^63), computed
/// without expanding the products.  nullopt if some den^(2^e) vanishes there.
std::optional<std::size_t> residue_rank(const std::vector<ResidueRow>& rows, const std::vector<int>& bits,
                                        std::uint64_t seed);

}  // namespace bcn::gf63
