// The non-reduced root system BC_n and its Weyl group of signed permutations.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcn {

enum class RootLength { VeryShort, Short, Long };

/// Integer coordinates in the basis eps_1..eps_n.
struct Root {
    std::vector<int> c;

    int rank() const { return static_cast<int>(c.size()); }
    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator*(int k, const Root& a);
    friend auto operator<=>(const Root&, const Root&) = default;
    std::string to_string() const;

    static Root eps(int n, int i, int sign = 1);  // sign * eps_i, i is 1-based
};

int inner(const Root& a, const Root& b);
bool is_root(const Root& a);
RootLength length_of(const Root& a);  // throws UnknownRoot
/// Height with respect to a_i = eps_i - eps_(i+1), a_n = eps_n.
int height(const Root& a);
bool is_positive(const Root& a);
/// <b, a^vee> = 2(b,a)/(a,a).
int pairing(const Root& b, const Root& a);

struct UnknownRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<Root> all_roots(int n);
/// b_1, b_2 = 2 b_1, b_3, b_4 = 2 b_3, ... (very short in height order, each
/// followed by its double) and then the short roots by height.
std::vector<Root> positive_roots_in_order(int n);
/// a_1..a_n (a_n very short).
std::vector<Root> simple_roots(int n);

/// w(eps_i) = sign[i] * eps_(perm[i]+1).
class WeylElement {
public:
    WeylElement() = default;
    static WeylElement identity(int n);
    /// perm is 0-based; throws std::invalid_argument on malformed input.
    static WeylElement signed_permutation(std::vector<int> perm, std::vector<int> sign);
    static WeylElement simple(int n, int i);  // s_i, 1-based
    static WeylElement longest(int n);
    static WeylElement from_word(int n, const std::vector<int>& word);

    int rank() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& sign() const { return sign_; }

    Root act(const Root& a) const;
    WeylElement operator*(const WeylElement& o) const;  // this after o
    WeylElement inverse() const;
    bool is_identity() const;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

    /// Greedy left-descent word, smallest index first.
    std::vector<int> reduced_word() const;
    int length() const;
    std::string to_string() const;

private:
    std::vector<int> perm_;
    std::vector<int> sign_;
};

/// {a in Phi+ : w a in Phi-}, over all of BC_n (a very short root and its
/// double are always inverted together).
std::vector<Root> inversion_set(const WeylElement& w);
/// The same restricted to the reduced system B_n.
std::vector<Root> inversion_set_reduced(const WeylElement& w);
/// All 2^n n! elements.
std::vector<WeylElement> weyl_group(int n);

}  // namespace bcn
