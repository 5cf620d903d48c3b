// Dimensions of irreducible modules L_G(lambda) = L_M(lambda) (x) L_C(lambda):
// the Cartan factor as the degree of a compositum of Frobenius-shifted
// fields, the Levi factor from 2-adic (n = 1) and tau-adic (n = 2)
// Steinberg expansions.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcn/group.hpp"

namespace bcn {

struct NotExpandable : std::domain_error {
    using std::domain_error::domain_error;
};
struct RankRequiresExternalLM : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// lambda_1..lambda_n, one entry per torus coordinate.
using DominantWeight = std::vector<std::uint64_t>;

/// Parses "3,0,1"; throws std::invalid_argument on anything else.
DominantWeight parse_weight(const std::string& s);
std::string weight_to_string(const DominantWeight& w);

/// The field each torus coordinate lives over:
/// standard (K,..,K), derived (K,..,K,K0), rank-2 (K,K0).
struct CartanProfile {
    Variant variant = Variant::Standard;
    std::vector<Subfield> fields;
};
CartanProfile cartan_profile(const GroupSpec& spec);

struct DimLC {
    std::uint64_t degree = 1;      // [compositum : k]
    std::uint64_t max_degree = 1;  // max_i [k_i(lambda_i) : k]
    bool chain = true;             // the k_i(lambda_i) are totally ordered by inclusion
    std::vector<Subfield> factors; // k_i(lambda_i) = k(F_i^(2^v(lambda_i)))
    Subfield field;                // their compositum
};
DimLC dim_LC(const CartanProfile& profile, const DominantWeight& lambda);

/// Binary digits, least significant first; 0 -> ().
std::vector<int> two_adic_expansion(std::uint64_t lambda);
/// 2^(number of ones).
std::uint64_t dim_LM_rank1(std::uint64_t lambda);

/// Bits r_i with (a, b) = sum (tau*)^i (r_i w), w = (1, 0), tau*(x, y) = (2y, x).
/// Throws NotExpandable for negative entries.
std::vector<int> tau_adic_expansion(std::int64_t a, std::int64_t b);
/// Inverse of tau_adic_expansion.
std::pair<std::int64_t, std::int64_t> tau_adic_evaluate(const std::vector<int>& bits);
/// 4^(number of ones): one natural 4-dimensional module per bit.
std::uint64_t dim_LM_rank2(std::uint64_t a, std::uint64_t b);

struct DimResult {
    DimLC lc;
    std::optional<std::uint64_t> dim_LM;
    std::string lm_source;  // "2-adic", "tau-adic", "external" or "trivial"
    std::optional<std::uint64_t> dim_LG;
    /// Closed form of the explicit n = 1 and rank-2 variant formulas, when it applies.
    std::optional<std::uint64_t> closed_form;
    std::string closed_form_text;
};

/// Throws RankRequiresExternalLM for n >= 3 and lambda != 0 without
/// external_LM.
DimResult dim_LG(const GroupSpec& spec, const DominantWeight& lambda,
                 std::optional<std::uint64_t> external_LM = std::nullopt);

std::string format_dim_result(const Tower& T, const DominantWeight& lambda, const DimResult& r);

}  // namespace bcn
