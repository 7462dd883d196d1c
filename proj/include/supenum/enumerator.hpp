// Weight and support distributions, their enumerator polynomials, the
// MacWilliams transform, and exact verification of the duality identities.
//
// Everything here is computed by two independent routes wherever the theory
// gives one: support counts by exhaustive enumeration and by the closed
// per-coordinate formula, weight distributions of duals by enumeration and
// by transform.  All comparisons are exact.
#pragma once

#include <cstdint>
#include <vector>

#include "supenum/code.hpp"
#include "supenum/rational_poly.hpp"

namespace supenum {

struct WeightDistribution {
    std::size_t length = 0;
    std::vector<Int> counts;  // A_0..A_n

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

struct SupportDistribution {
    std::size_t length = 0;
    std::vector<Int> counts;  // S_1..S_n, stored 0-based

    friend bool operator==(const SupportDistribution&, const SupportDistribution&) = default;
};

/// A_w = number of codewords of weight w, by full enumeration.
WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t cap = kDefaultEnumCap);

/// S_i = number of codewords nonzero in coordinate i, by full enumeration.
SupportDistribution support_distribution_enum(const LinearCode& code,
                                              std::uint64_t cap = kDefaultEnumCap);

/// S_i by the per-coordinate formula: 0 when e_i lies in the dual code,
/// (q-1) q^(k-1) otherwise.  Needs membership tests only, so it works for
/// codes far beyond the enumeration cap.
SupportDistribution support_distribution_closed(const LinearCode& code);

/// Enumeration when q^k fits the cap, closed formula otherwise.
SupportDistribution support_distribution(const LinearCode& code,
                                         std::uint64_t cap = kDefaultEnumCap);

/// S_C(z) = sum of S_i z^i.
RationalPoly support_enumerator(const SupportDistribution& s);

/// W_C(z) = sum of A_w z^w.
RationalPoly weight_enumerator(const WeightDistribution& w);

struct TotalWeightIdentity {
    Int coordinate_total;  // sum of S_i
    Int weight_total;      // sum of w * A_w
    bool holds = false;
};

/// Both totals computed independently; they agree for every linear code, so
/// a mismatch signals an implementation bug.
TotalWeightIdentity total_weight_identity(const LinearCode& code,
                                          std::uint64_t cap = kDefaultEnumCap);

/// Dual weight distribution via the homogeneous substitution
/// (x, y) -> (x + (q-1)y, x - y) scaled by 1/|C|, expanded with exact
/// binomials.  Throws NonIntegralTransform when the input is not the weight
/// distribution of a linear code (fractional or negative output).
WeightDistribution macwilliams_transform(const WeightDistribution& w, unsigned q);

struct SupportIdentityReport {
    RationalPoly lhs;  // S_C(z)/|C| + S_dual(z)/|dual|
    RationalPoly rhs;  // (q-1)/q * (sum z^i + sum over D of z^i)
    std::vector<std::size_t> neither_coords;  // D, 1-indexed
    bool holds = false;
    bool primal_enumerated = false;  // which route produced each side
    bool dual_enumerated = false;
};

/// Exact check of the support-enumerator duality identity.
SupportIdentityReport verify_support_identity(const LinearCode& code,
                                              std::uint64_t cap = kDefaultEnumCap);

struct SelfDualCriterionReport {
    bool self_dual = false;
    bool criterion_holds = false;  // necessary for self-duality, not sufficient
    RationalPoly lhs;              // S_C(z)/|C|
    RationalPoly rhs;              // (q-1)/(2q) * (sum z^i + sum over {e_i not in C} z^i)
};

/// Evaluates the self-duality criterion; the report carries both sides even
/// when the code is not self-dual.
SelfDualCriterionReport verify_self_dual_criterion(const LinearCode& code,
                                                   std::uint64_t cap = kDefaultEnumCap);

}  // namespace supenum
