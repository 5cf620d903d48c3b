#include "bcn/irrep_dims.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bcn {

DominantWeight parse_weight(const std::string& s) {
    DominantWeight w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("weight entries must be non-negative integers: '" + s + "'");
        w.push_back(std::stoull(item));
    }
    if (w.empty()) throw std::invalid_argument("empty weight");
    return w;
}

std::string weight_to_string(const DominantWeight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

CartanProfile cartan_profile(const GroupSpec& spec) {
    CartanProfile p;
    p.variant = spec.variant;
    const int n = spec.rank();
    p.fields.assign(static_cast<std::size_t>(n), spec.data.K);
    if (spec.variant != Variant::Standard) p.fields.back() = spec.derived.K0;
    return p;
}

DimLC dim_LC(const CartanProfile& profile, const DominantWeight& lambda) {
    if (lambda.size() != profile.fields.size())
        throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " entries, expected " +
                                    std::to_string(profile.fields.size()));
    DimLC r;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        r.factors.push_back(frobenius_shifted_subfield(profile.fields[i], lambda[i]));
    r.field = compositum(r.factors);
    r.degree = r.field.degree();
    for (const Subfield& F : r.factors) r.max_degree = std::max<std::uint64_t>(r.max_degree, F.degree());
    for (std::size_t i = 0; i < r.factors.size(); ++i)
        for (std::size_t j = i + 1; j < r.factors.size(); ++j)
            if (!r.factors[i].contains(r.factors[j]) && !r.factors[j].contains(r.factors[i])) r.chain = false;
    return r;
}

std::vector<int> two_adic_expansion(std::uint64_t lambda) {
    std::vector<int> bits;
    for (; lambda; lambda >>= 1) bits.push_back(static_cast<int>(lambda & 1));
    return bits;
}

std::uint64_t dim_LM_rank1(std::uint64_t lambda) { return std::uint64_t{1} << std::popcount(lambda); }

std::vector<int> tau_adic_expansion(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0)
        throw NotExpandable("(" + std::to_string(a) + "," + std::to_string(b) + ") has no expansion with bits in {0,1}");
    // (a, b) = r0 w + tau*(next) with next = (b, (a - r0) / 2)
    std::vector<int> bits;
    while (a || b) {
        int r0 = static_cast<int>(a & 1);
        bits.push_back(r0);
        std::int64_t na = b, nb = (a - r0) / 2;
        a = na;
        b = nb;
    }
    return bits;
}

std::pair<std::int64_t, std::int64_t> tau_adic_evaluate(const std::vector<int>& bits) {
    std::int64_t a = 0, b = 0;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        std::int64_t na = *it + 2 * b;  // r w + tau*(a, b)
        b = a;
        a = na;
    }
    return {a, b};
}

std::uint64_t dim_LM_rank2(std::uint64_t a, std::uint64_t b) {
    auto bits = tau_adic_expansion(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
    return std::uint64_t{1} << (2 * std::count(bits.begin(), bits.end(), 1));
}

namespace {

std::uint64_t shifted_degree(const Subfield& F, int e) {
    return frobenius_shifted_subfield(F, std::uint64_t{1} << e).degree();
}

}  // namespace

DimResult dim_LG(const GroupSpec& spec, const DominantWeight& lambda, std::optional<std::uint64_t> external_LM) {
    const int n = spec.rank();
    DimResult r;
    r.lc = dim_LC(cartan_profile(spec), lambda);
    bool zero = std::all_of(lambda.begin(), lambda.end(), [](std::uint64_t x) { return x == 0; });
    if (zero) {
        r.dim_LM = 1;
        r.lm_source = "trivial";
    } else if (external_LM) {
        r.dim_LM = external_LM;
        r.lm_source = "external";
    } else if (n == 1) {
        r.dim_LM = dim_LM_rank1(lambda[0]);
        r.lm_source = "2-adic";
    } else if (n == 2) {
        r.dim_LM = dim_LM_rank2(lambda[0], lambda[1]);
        r.lm_source = "tau-adic";
    } else {
        throw RankRequiresExternalLM("no formula for dim L_M when n = " + std::to_string(n) +
                                     "; pass the Levi factor explicitly");
    }
    r.dim_LG = *r.dim_LM * r.lc.degree;

    if (zero) return r;
    if (n == 1) {
        int j = std::countr_zero(lambda[0]);
        r.closed_form = dim_LM_rank1(lambda[0]) * shifted_degree(spec.data.K, j);
        r.closed_form_text = "2^" + std::to_string(std::popcount(lambda[0])) + " * [k(K^(2^" + std::to_string(j) + ")):k]";
    } else if (n == 2 && spec.variant == Variant::Rank2) {
        auto bits = tau_adic_expansion(static_cast<std::int64_t>(lambda[0]), static_cast<std::int64_t>(lambda[1]));
        int j = static_cast<int>(std::find(bits.begin(), bits.end(), 1) - bits.begin());
        auto ones = std::count(bits.begin(), bits.end(), 1);
        std::uint64_t four_r = std::uint64_t{1} << (2 * ones);
        if (j % 2 == 0) {
            r.closed_form = shifted_degree(spec.data.K, j / 2) * four_r;
            r.closed_form_text = "[k(K^(2^" + std::to_string(j / 2) + ")):k] * 4^" + std::to_string(ones);
        } else {
            r.closed_form = shifted_degree(spec.derived.K0, (j - 1) / 2) * four_r;
            r.closed_form_text = "[k(K0^(2^" + std::to_string((j - 1) / 2) + ")):k] * 4^" + std::to_string(ones);
        }
    }
    return r;
}

std::string format_dim_result(const Tower& T, const DominantWeight& lambda, const DimResult& r) {
    std::ostringstream os;
    os << "lambda = (" << weight_to_string(lambda) << ")\n";
    os << "dim_LC = " << r.lc.degree << "\n";
    os << "dim_LC_max = " << r.lc.max_degree << "\n";
    os << "chain = " << (r.lc.chain ? "yes" : "no") << "\n";
    os << "dim_LM = " << (r.dim_LM ? std::to_string(*r.dim_LM) : "unknown") << " (" << r.lm_source << ")\n";
    os << "dim_LG = " << (r.dim_LG ? std::to_string(*r.dim_LG) : "unknown") << "\n";
    if (r.closed_form) os << "closed_form = " << *r.closed_form << " = " << r.closed_form_text << "\n";
    os << "certificate_field_basis = [";
    for (std::size_t i = 0; i < r.lc.field.basis().size(); ++i)
        os << (i ? ", " : "") << T.to_string(r.lc.field.basis()[i]);
    os << "]\n";
    for (std::size_t i = 0; i < r.lc.factors.size(); ++i)
        os << "factor_" << i + 1 << "_degree = " << r.lc.factors[i].degree() << "\n";
    return os.str();
}

}  // namespace bcn
