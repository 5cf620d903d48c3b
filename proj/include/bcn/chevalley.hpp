// Matrix model of Q = U x| Sp_2n acting on column vectors in the basis
// (e_1..e_n, f_1..f_n, x0), with SO_(2n+1) inside it.  Elements have block
// form [[g, 0], [v, 1]].  Characteristic 2 throughout, so all signs vanish.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcn/roots.hpp"
#include "bcn/tower.hpp"

namespace bcn {

struct NotInBigGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Square matrix over E'.  Generic so that inputs of the wrong shape can be
/// represented and rejected.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(int size);  // zero matrix
    static QMatrix identity_q(int n) { return identity(2 * n + 1); }
    static QMatrix identity(int size);

    int size() const { return size_; }
    int rank() const { return (size_ - 1) / 2; }
    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * size_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * size_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    friend bool operator==(const QMatrix&, const QMatrix&) = default;
    bool is_identity() const;

    /// Block shape [[g,0],[v,1]] with g symplectic.
    bool is_q_shaped() const;
    /// Inverse of a Q-shaped element: [[g^-1,0],[v g^-1,1]] with g^-1 = J g^T J.
    QMatrix inverse() const;

    /// Top-left block embedded back with v = 0 (the Levi image).
    QMatrix pi() const;
    /// Row vector v of length 2n.
    std::vector<Elem> translation() const;

    std::string to_string(const Tower& T) const;

private:
    int size_ = 0;
    std::vector<Elem> a_;
};

/// Basis index of the weight vector with weight sign*eps_i (0-based index).
int weight_index(int n, int i, int sign);
/// Weight of basis index p (zero root for x0).
Root weight_of(int n, int p);

/// x_a(t) for short and long a, y_a(t) for very short a.
QMatrix root_element(const Root& a, const Elem& t);
/// Pure translation [[I,0],[v,1]].
QMatrix translation(int n, const std::vector<Elem>& v);
/// s_a(t) = x_a(t) x_-a(t^-1) x_a(t).
QMatrix s_elem(const Root& a, const Elem& t);
/// h_a(t) = s_a(t) s_a(1).
QMatrix h_elem(const Root& a, const Elem& t);
/// Diagonal torus element with c_i at e_i and c_i^-1 at f_i.
QMatrix torus(const std::vector<Elem>& c);
/// s_i for i < n, s_n = s_(2 a_n)(1); 1-based.
QMatrix simple_reflection(int n, int i);
/// Product of simple reflections along the fixed reduced word of w.
QMatrix weyl_rep(const WeylElement& w);

QMatrix commutator(const QMatrix& g, const QMatrix& h);

struct FormReport {
    bool in_sp_part = false;
    bool in_so = false;
};
/// in_so compares the coefficient table of q(Mx) for generic x with that of q.
FormReport preserves_forms(const QMatrix& g);

struct RelationFailure {
    std::string relation;
    std::string detail;
};

struct PinningReport {
    std::size_t checks = 0;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Randomized exact checks of the commutator formula, Weyl conjugation,
/// torus action, the s/h identities and commutation of very short with long
/// root groups.  `samples` field-element draws per relation family.
PinningReport verify_pinning_relations(const TowerPtr& tower, int n, int samples, Rng& rng);

/// The explicit rank-1 factorization of s*b*s.
struct AppendixReport {
    bool literal_holds = false;    // factorization exactly as displayed
    bool corrected_holds = false;  // with the (0,1) entry of the left factor set to 1/a
    bool degenerate_diagonal = false;  // t = u = 0 gives diagonal s*b*s
    std::size_t instances = 0;
    std::size_t literal_failures = 0;
    std::string note;
};
AppendixReport check_appendix_identity(const TowerPtr& tower, int samples, Rng& rng);

}  // namespace bcn
