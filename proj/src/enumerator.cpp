#include "supenum/enumerator.hpp"

#include <string>

namespace supenum {

WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t cap) {
    WeightDistribution w;
    w.length = code.length();
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    code.for_each_codeword(cap, [&](const Vector& c) { ++counts[c.weight()]; });
    w.counts.assign(counts.begin(), counts.end());
    return w;
}

SupportDistribution support_distribution_enum(const LinearCode& code, std::uint64_t cap) {
    SupportDistribution s;
    s.length = code.length();
    std::vector<std::uint64_t> counts(code.length(), 0);
    code.for_each_codeword(cap, [&](const Vector& c) {
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (c.idx(i) != 0) ++counts[i];
    });
    s.counts.assign(counts.begin(), counts.end());
    return s;
}

SupportDistribution support_distribution_closed(const LinearCode& code) {
    SupportDistribution s;
    s.length = code.length();
    s.counts.assign(code.length(), Int(0));
    if (code.dimension() == 0) return s;

    Int active = (Int(code.field()->order()) - 1) * (code.size() / code.field()->order());
    LinearCode dual = code.dual();
    for (std::size_t i = 0; i < code.length(); ++i) {
        Vector e = standard_basis_vector(code.field(), code.length(), i);
        if (!dual.contains(e)) s.counts[i] = active;
    }
    return s;
}

SupportDistribution support_distribution(const LinearCode& code, std::uint64_t cap) {
    if (code.size_if_within(cap)) return support_distribution_enum(code, cap);
    return support_distribution_closed(code);
}

RationalPoly support_enumerator(const SupportDistribution& s) {
    RationalPoly p;
    for (std::size_t i = 0; i < s.length; ++i) p.set(i + 1, Rational(s.counts[i]));
    return p;
}

RationalPoly weight_enumerator(const WeightDistribution& w) {
    RationalPoly p;
    for (std::size_t i = 0; i < w.counts.size(); ++i) p.set(i, Rational(w.counts[i]));
    return p;
}

TotalWeightIdentity total_weight_identity(const LinearCode& code, std::uint64_t cap) {
    TotalWeightIdentity r;
    SupportDistribution s = support_distribution_enum(code, cap);
    for (const auto& c : s.counts) r.coordinate_total += c;

    WeightDistribution w = weight_distribution(code, cap);
    for (std::size_t i = 0; i < w.counts.size(); ++i) r.weight_total += Int(i) * w.counts[i];

    r.holds = r.coordinate_total == r.weight_total;
    return r;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, unsigned q) {
    const std::size_t n = w.length;
    if (w.counts.size() != n + 1) throw DimensionMismatch("weight distribution has wrong size");

    Int code_size = 0;
    for (const auto& c : w.counts) code_size += c;
    if (code_size <= 0) throw NonIntegralTransform("empty weight distribution");

    Int space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= q;
    if (space % code_size != 0)
        throw NonIntegralTransform("code size " + code_size.str() + " does not divide q^n");

    // Pascal triangle up to n
    std::vector<std::vector<Int>> binom(n + 1, std::vector<Int>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
    }
    std::vector<Int> qm1_pow(n + 1);
    qm1_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * (q - 1);

    // coefficient of x^(n-j) y^j in (x + (q-1)y)^(n-w) (x - y)^w, accumulated
    // over all weights w with A_w != 0
    WeightDistribution out;
    out.length = n;
    out.counts.assign(n + 1, Int(0));
    for (std::size_t j = 0; j <= n; ++j) {
        Int acc = 0;
        for (std::size_t wgt = 0; wgt <= n; ++wgt) {
            if (w.counts[wgt] == 0) continue;
            Int term = 0;
            for (std::size_t h = 0; h <= j && h <= wgt; ++h) {
                if (j - h > n - wgt) continue;
                Int part = binom[wgt][h] * binom[n - wgt][j - h] * qm1_pow[j - h];
                if (h % 2)
                    term -= part;
                else
                    term += part;
            }
            acc += w.counts[wgt] * term;
        }
        if (acc % code_size != 0)
            throw NonIntegralTransform("transform output A_" + std::to_string(j) +
                                       " is not an integer");
        Int v = acc / code_size;
        if (v < 0)
            throw NonIntegralTransform("transform output A_" + std::to_string(j) + " is negative");
        out.counts[j] = v;
    }
    return out;
}

SupportIdentityReport verify_support_identity(const LinearCode& code, std::uint64_t cap) {
    SupportIdentityReport rep;
    const std::size_t n = code.length();
    const unsigned q = code.field()->order();
    LinearCode dual = code.dual();

    rep.primal_enumerated = code.size_if_within(cap).has_value();
    rep.dual_enumerated = dual.size_if_within(cap).has_value();
    SupportDistribution s = rep.primal_enumerated ? support_distribution_enum(code, cap)
                                                  : support_distribution_closed(code);
    SupportDistribution sd = rep.dual_enumerated ? support_distribution_enum(dual, cap)
                                                 : support_distribution_closed(dual);

    Rational inv_size(Int(1), code.size());
    Rational inv_dual_size(Int(1), dual.size());
    for (std::size_t i = 0; i < n; ++i) {
        rep.lhs.add_to(i + 1, Rational(s.counts[i]) * inv_size);
        rep.lhs.add_to(i + 1, Rational(sd.counts[i]) * inv_dual_size);
    }

    BasisPartition part = standard_basis_partition(code);
    RationalPoly rhs_inner = all_coords_poly(n);
    for (std::size_t i : part.coords(CoordClass::kNeither)) {
        rep.neither_coords.push_back(i + 1);
        rhs_inner.add_to(i + 1, 1);
    }
    rep.rhs = rhs_inner * Rational(q - 1, q);

    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

SelfDualCriterionReport verify_self_dual_criterion(const LinearCode& code, std::uint64_t cap) {
    SelfDualCriterionReport rep;
    const std::size_t n = code.length();
    const unsigned q = code.field()->order();

    rep.self_dual = code.is_self_dual();

    SupportDistribution s = support_distribution(code, cap);
    Rational inv_size(Int(1), code.size());
    for (std::size_t i = 0; i < n; ++i) rep.lhs.add_to(i + 1, Rational(s.counts[i]) * inv_size);

    RationalPoly rhs_inner = all_coords_poly(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e = standard_basis_vector(code.field(), n, i);
        if (!code.contains(e)) rhs_inner.add_to(i + 1, 1);
    }
    rep.rhs = rhs_inner * Rational(q - 1, 2 * q);

    rep.criterion_holds = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace supenum
