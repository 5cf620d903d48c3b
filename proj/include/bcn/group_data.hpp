// Defining data (K/k, V2, V', [V'']) of the groups and the derived V, E, K0.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcn/tower.hpp"

namespace bcn {

struct TowerTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar fields a subspace may be declared over.
enum class Scalars { k, K2, kK2, K0, K };
Scalars parse_scalars(const std::string& s);
std::string scalars_name(Scalars s);

struct BCData {
    TowerPtr tower;
    int rank = 1;
    Subfield K;
    Subspace V2;  // V^(2)
    Subspace Vp;  // V'
    std::optional<Subspace> Vpp;  // V'' (rank-2 variant)
};

/// Builds the subspaces over their declared scalar fields.  K0 is computed
/// from V2 + V' before V'' is built when V'' is declared over K0.
BCData make_bc_data(TowerPtr tower, int rank, const std::vector<Elem>& K_generators,
                    const std::vector<Elem>& V2_basis, const std::vector<Elem>& Vp_basis,
                    Scalars V2_over = Scalars::K2, Scalars Vp_over = Scalars::kK2,
                    const std::optional<std::vector<Elem>>& Vpp_basis = std::nullopt,
                    Scalars Vpp_over = Scalars::K0);

ScalarField scalar_field(const BCData& d, Scalars s);

/// V0 = V2 + V' over level 1.
Subspace v0_space(const BCData& d);
Subfield compute_K0(const BCData& d);

struct Violation {
    std::string id;    // stable identifier, e.g. "v2_cap_vp"
    std::string name;  // human-readable condition, e.g. "V^(2) ∩ V′ ≠ 0"
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& id) const;
};

ValidationReport validate(const BCData& d);

struct DerivedData {
    Subfield K0;
    Subspace V;   // K-span of the square roots of the V2 basis
    Subfield E;   // K(V)
    Subspace V0;  // V2 + V'
    bool one_in_Vp = false;
    bool one_in_V = false;
    bool one_in_Vpp = false;

    /// x in V2 iff sqrt(x) exists and lies in V.
    bool in_V2(const Tower& T, const Elem& x) const;
};

DerivedData derive(const BCData& d);

/// The unique (x, y) with x in V2, y in V' and x + y = z, or nullopt if z is
/// not in V2 + V'.  Assumes V2 ∩ V' = 0, which makes the split unique.
std::optional<std::pair<Elem, Elem>> split_v0(const BCData& d, const Elem& z);

/// (K/k, v V2, v V'[, V'']) for nonzero v in V'; 1 lies in the new V'.
BCData normalize_data(const BCData& d, const Elem& v);
/// (K/k, mu V2, mu V'[, V'']) for any nonzero mu in K.
BCData scale_data(const BCData& d, const Elem& mu);

}  // namespace bcn
