// Seeded random-code sampler and property suite.
//
// Every theorem in the library doubles as an executable property here; a
// failing property is reported with a greedily shrunk counterexample matrix.
// Sampling is keyed by (seed, trialIndex) with a counter-based generator, so
// trials are independent and the whole report is reproducible byte for byte.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supenum/code.hpp"

namespace supenum {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::uint32_t trials = 100;
    std::vector<FieldPtr> field_pool;  // defaults to F_2, F_3, F_4 when empty
    std::size_t n_min = 1, n_max = 8;
    std::size_t k_min = 0, k_max = 8;
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t lemma_scan_cap = std::uint64_t(1) << 12;  // q^n bound for the full u-scan
    bool inject_self_dual_fixtures = true;
    // harness self-test: corrupt the enumerated S_1 so the support-formula
    // property fails and the shrinker has something to chew on
    bool corrupt_support_self_test = false;

    std::vector<FieldPtr> effective_pool() const;
};

enum class PropertyId : std::uint8_t {
    kTotalWeight,
    kSupportFormula,
    kSupportIdentity,
    kLemmaDichotomy,
    kMacwilliams,
    kSelfDualCriterion,
};

std::string property_name(PropertyId id);

struct PropertyStats {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
};

struct Counterexample {
    PropertyId property;
    std::int64_t trial;  // -1..-F for injected fixtures
    std::string detail;
    Matrix original;
    Matrix shrunk;
};

struct FuzzReport {
    FuzzConfig config;
    std::uint64_t codes_sampled = 0;
    std::uint64_t fixtures_injected = 0;
    std::uint64_t rank_deficient = 0;  // sampled matrices whose rank dropped
    std::map<PropertyId, PropertyStats> stats;
    std::uint64_t failures = 0;
    std::optional<Counterexample> first_failure;

    std::string to_text() const;
    std::string to_json_string() const;
};

/// The uniform random generator matrix for this trial (before row reduction).
Matrix sample_matrix(const FuzzConfig& cfg, std::uint32_t trial);

/// Code built from sample_matrix; the dimension may be below the requested k
/// when sampled rows are dependent.
LinearCode sample_code(const FuzzConfig& cfg, std::uint32_t trial);

FuzzReport run_suite(const FuzzConfig& cfg);

/// Re-run one property against a code; empty result means it passes (or does
/// not apply).  Exposed for shrink verification in tests.
std::optional<std::string> check_property(PropertyId id, const LinearCode& code,
                                          const FuzzConfig& cfg);

}  // namespace supenum
