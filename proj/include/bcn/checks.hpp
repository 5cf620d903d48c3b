// Randomized exact property suites on a GroupSpec: normal-form round trip,
// injectivity of the product map over positive root groups, BN-pair axioms,
// Levi containment, conjugation by h(lambda), Cartan action on root groups
// and the commutator identities behind perfectness of the rank-2 variant.
//
// Every suite is deterministic given the Rng state.
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bcn/group.hpp"

namespace bcn {

struct PreconditionNotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CheckReport {
    std::string suite;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// First few failures, with enough detail (matrices, coefficients) to
    /// re-check them by hand.
    std::vector<std::string> counterexamples;
    /// Skipped sub-checks and other remarks.
    std::vector<std::string> notes;

    bool ok() const { return failures == 0; }
    /// Counts one check; `detail` is only evaluated on failure.
    void expect(bool passed, const std::string& what, const std::function<std::string()>& detail = {});
    void merge(const CheckReport& other);
};

/// evaluate -> normal form -> evaluate is the identity on random words,
/// normal form of the re-evaluation equals the normal form, membership says
/// yes, and distinct sampled normal forms give distinct matrices.
CheckReport check_round_trip(const GroupSpec& spec, int words, int atoms, Rng& rng);

/// Distinct coefficient tuples over the positive root groups in the fixed
/// order give distinct products; c^2 + c' determines (c, c') for c in V,
/// c' in V'; a constructed near collision differs in the translation part.
CheckReport check_mu_injectivity(const GroupSpec& spec, int samples, Rng& rng);

/// BN2, BN4, BN5 on sampled instances, the saturation identity
/// (intersection of the conjugates s_w B s_w^-1 is C) one sample at a time,
/// and pi(g) = 1 => g = 1.
CheckReport check_bn_axioms(const GroupSpec& spec, int samples, Rng& rng);

/// Generators of Sp_2n with coefficients in k are members when 1 lies in V';
/// generators of SO_(2n+1) with coefficients in k are members when 1 lies in
/// V (and in V'' for the rank-2 variant).  Since 1 in V forces 1 in V2, the
/// two cases never occur together for valid data; each check runs when its
/// precondition holds and is reported as skipped otherwise.  Throws
/// PreconditionNotNormalized when neither holds.
CheckReport check_levi_containment(const GroupSpec& spec, int samples, Rng& rng);

/// For random lambda (with lambda^2 in K0 for the rank-2 variant) every
/// sampled generator conjugated by h(lambda) is a member of the conjugate
/// spec, h(lambda) x_2a(u) h(lambda)^-1 = x_2a(lambda^2 u) for positive long
/// a, and lambda = sqrt(v) with v in V' puts 1 into the new V'.
CheckReport check_conjugation(const GroupSpec& spec, int lambdas, Rng& rng);

/// h_a(u) x_b(c) h_a(u)^-1 = x_b(u^<b,a^> c) with the new coefficient still in
/// the domain of b, for the simple Cartan generators a and all roots b.
CheckReport check_constraint_stability(const GroupSpec& spec, int samples, Rng& rng);

/// Rank-2 variant: each simple root group and each representative is
/// reached by an explicit commutator.
CheckReport check_perfectness_witnesses(const GroupSpec& spec, int samples, Rng& rng);

}  // namespace bcn
