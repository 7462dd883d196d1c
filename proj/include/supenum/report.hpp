// Full analysis of one code: parameters, distributions, enumerators and the
// identity verdicts, serializable as stable JSON or human-readable text.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supenum/enumerator.hpp"

namespace supenum {

struct Verdict {
    enum class State { kHolds, kFails, kSkipped };
    State state = State::kSkipped;
    std::string reason;  // set when skipped

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string verdict_state_name(Verdict::State s);

struct AnalysisReport {
    // code parameters
    unsigned p = 0, m = 0;
    std::vector<unsigned> modulus;
    std::size_t n = 0, k = 0, dual_k = 0;
    Int code_size;
    std::optional<std::size_t> min_distance;  // only when enumerable and k >= 1
    bool self_dual = false;

    // distributions (counts as exact integers)
    std::optional<std::vector<Int>> weight_counts;  // A_0..A_n, enumeration only
    std::vector<Int> support_counts;                // S_1..S_n
    std::vector<Int> dual_support_counts;           // dual S_1..S_n

    // enumerator polynomials
    std::optional<RationalPoly> weight_poly;  // W_C(z)
    RationalPoly support_poly;                // S_C(z)

    // duality identity detail
    RationalPoly identity_lhs, identity_rhs;
    std::vector<std::size_t> neither_coords;  // D, 1-indexed

    // self-duality criterion detail
    RationalPoly criterion_lhs, criterion_rhs;
    bool criterion_holds = false;

    // verdicts
    Verdict total_weight, support_formula, support_identity, self_dual_criterion;

    bool any_fails() const;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Run the full analysis; oversized enumerations become SKIPPED verdicts.
AnalysisReport build_analysis(const LinearCode& code, std::uint64_t cap = kDefaultEnumCap);

std::string report_to_text(const AnalysisReport& r);
std::string report_to_json(const AnalysisReport& r);  // stable schema, 2-space indent
AnalysisReport report_from_json(const std::string& json_text);

}  // namespace supenum
