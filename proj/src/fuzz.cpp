#include "supenum/fuzz.hpp"

#include <sstream>

#include <json.hpp>

#include "supenum/charsum.hpp"
#include "supenum/enumerator.hpp"
#include "supenum/families.hpp"

namespace supenum {

namespace {

// splitmix64 over a per-trial offset stream
struct Rng {
    std::uint64_t state;
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state(seed + stream * 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next() % bound; }
};

std::vector<Matrix> self_dual_fixtures() {
    FieldPtr f2 = Field::make(2, 1);
    FieldPtr f5 = Field::make(5, 1);
    return {
        extended_hamming_8_4().generator(),
        Matrix::from_rows(f2, {{1, 1}}),
        Matrix::from_rows(f5, {{1, 2}}),  // (1,2).(1,2) = 1 + 4 = 0 in F_5
    };
}

std::string poly_or_empty(const RationalPoly& p) {
    return p.to_string();
}

}  // namespace

std::vector<FieldPtr> FuzzConfig::effective_pool() const {
    if (!field_pool.empty()) return field_pool;
    return {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)};
}

std::string property_name(PropertyId id) {
    switch (id) {
        case PropertyId::kTotalWeight: return "total-weight";
        case PropertyId::kSupportFormula: return "support-formula";
        case PropertyId::kSupportIdentity: return "support-identity";
        case PropertyId::kLemmaDichotomy: return "lemma-dichotomy";
        case PropertyId::kMacwilliams: return "macwilliams";
        case PropertyId::kSelfDualCriterion: return "self-dual-criterion";
    }
    return "unknown";
}

Matrix sample_matrix(const FuzzConfig& cfg, std::uint32_t trial) {
    Rng rng(cfg.seed, std::uint64_t(trial) + 1);
    auto pool = cfg.effective_pool();
    FieldPtr field = pool[rng.below(pool.size())];
    const unsigned q = field->order();

    std::size_t n = cfg.n_min + rng.below(cfg.n_max - cfg.n_min + 1);
    std::size_t k_hi = std::min(cfg.k_max, n);
    std::size_t k_lo = std::min(cfg.k_min, k_hi);
    std::size_t k = k_lo + rng.below(k_hi - k_lo + 1);
    // keep q^k within the enumeration cap
    while (k > 0) {
        std::uint64_t count = 1;
        bool fits = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (count > cfg.enum_cap / q) {
                fits = false;
                break;
            }
            count *= q;
        }
        if (fits && count <= cfg.enum_cap) break;
        --k;
    }

    Matrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.set_idx(r, c, static_cast<std::uint8_t>(rng.below(q)));
    return m;
}

LinearCode sample_code(const FuzzConfig& cfg, std::uint32_t trial) {
    return LinearCode::from_generator(sample_matrix(cfg, trial));
}

std::optional<std::string> check_property(PropertyId id, const LinearCode& code,
                                          const FuzzConfig& cfg) {
    const unsigned q = code.field()->order();
    const bool enumerable = code.size_if_within(cfg.enum_cap).has_value();

    switch (id) {
        case PropertyId::kTotalWeight: {
            if (!enumerable) return std::nullopt;
            auto r = total_weight_identity(code, cfg.enum_cap);
            if (!r.holds)
                return "coordinate total " + r.coordinate_total.str() + " != weight total " +
                       r.weight_total.str();
            return std::nullopt;
        }
        case PropertyId::kSupportFormula: {
            if (!enumerable) return std::nullopt;
            SupportDistribution by_enum = support_distribution_enum(code, cfg.enum_cap);
            if (cfg.corrupt_support_self_test && !by_enum.counts.empty())
                by_enum.counts[0] += 1;
            SupportDistribution by_formula = support_distribution_closed(code);
            if (by_enum != by_formula) return "enumerated and closed-form support counts differ";
            Int active = code.dimension() == 0
                             ? Int(0)
                             : (Int(q) - 1) * (code.size() / q);
            for (std::size_t i = 0; i < by_enum.counts.size(); ++i)
                if (by_enum.counts[i] != 0 && by_enum.counts[i] != active)
                    return "S_" + std::to_string(i + 1) + " = " + by_enum.counts[i].str() +
                           " outside {0, " + active.str() + "}";
            return std::nullopt;
        }
        case PropertyId::kSupportIdentity: {
            auto rep = verify_support_identity(code, cfg.enum_cap);
            if (!rep.holds)
                return "identity sides differ: lhs = " + poly_or_empty(rep.lhs) +
                       ", rhs = " + poly_or_empty(rep.rhs);
            Rational unit(q - 1, q);
            for (const auto& [e, c] : rep.lhs.terms())
                if (c != unit && c != unit * 2)
                    return "lhs coefficient of z^" + std::to_string(e) + " outside the allowed set";
            return std::nullopt;
        }
        case PropertyId::kLemmaDichotomy: {
            if (!enumerable) return std::nullopt;
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < code.length(); ++i) {
                if (total > cfg.lemma_scan_cap / q) return std::nullopt;
                total *= q;
            }
            if (total > cfg.lemma_scan_cap) return std::nullopt;
            LinearCode dual = code.dual();
            CyclotomicInt expected_in =
                CyclotomicInt::integer(code.field()->characteristic(),
                                       static_cast<long long>(*code.size_if_within(cfg.enum_cap)));
            CyclotomicInt expected_out(code.field()->characteristic());
            // scan all u in F_q^n, mixed-radix counter order
            Vector u(code.field(), code.length());
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::uint64_t v = idx;
                for (std::size_t i = 0; i < code.length(); ++i) {
                    u.set_idx(i, static_cast<std::uint8_t>(v % q));
                    v /= q;
                }
                CyclotomicInt s = lemma_char_sum(code, u, cfg.enum_cap);
                const CyclotomicInt& expected = dual.contains(u) ? expected_in : expected_out;
                if (!(s == expected))
                    return "S(u) = " + s.to_string() + " for u index " + std::to_string(idx);
            }
            return std::nullopt;
        }
        case PropertyId::kMacwilliams: {
            if (!enumerable) return std::nullopt;
            LinearCode dual = code.dual();
            if (!dual.size_if_within(cfg.enum_cap)) return std::nullopt;
            WeightDistribution w = weight_distribution(code, cfg.enum_cap);
            WeightDistribution transformed = macwilliams_transform(w, q);
            WeightDistribution dual_w = weight_distribution(dual, cfg.enum_cap);
            if (transformed != dual_w) return "transform disagrees with dual enumeration";
            if (macwilliams_transform(transformed, q) != w)
                return "double transform is not the identity";
            return std::nullopt;
        }
        case PropertyId::kSelfDualCriterion: {
            if (!code.is_self_dual()) return std::nullopt;
            auto rep = verify_self_dual_criterion(code, cfg.enum_cap);
            if (!rep.criterion_holds)
                return "self-dual code fails the criterion: lhs = " + poly_or_empty(rep.lhs) +
                       ", rhs = " + poly_or_empty(rep.rhs);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

constexpr PropertyId kAllProperties[] = {
    PropertyId::kTotalWeight,     PropertyId::kSupportFormula, PropertyId::kSupportIdentity,
    PropertyId::kLemmaDichotomy,  PropertyId::kMacwilliams,    PropertyId::kSelfDualCriterion,
};

// Whether the property would actually run on this code (mirrors the guards
// in check_property); used to split "passed" from "skipped".
bool property_applies(PropertyId id, const LinearCode& code, const FuzzConfig& cfg) {
    const unsigned q = code.field()->order();
    const bool enumerable = code.size_if_within(cfg.enum_cap).has_value();
    switch (id) {
        case PropertyId::kTotalWeight:
        case PropertyId::kSupportFormula:
            return enumerable;
        case PropertyId::kSupportIdentity:
            return true;
        case PropertyId::kLemmaDichotomy: {
            if (!enumerable) return false;
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < code.length(); ++i) {
                if (total > cfg.lemma_scan_cap / q) return false;
                total *= q;
            }
            return total <= cfg.lemma_scan_cap;
        }
        case PropertyId::kMacwilliams:
            return enumerable && code.dual().size_if_within(cfg.enum_cap).has_value();
        case PropertyId::kSelfDualCriterion:
            return code.is_self_dual();
    }
    return false;
}

Matrix shrink_counterexample(PropertyId id, Matrix failing, const FuzzConfig& cfg) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < failing.cols() && failing.cols() > 1; ++c) {
            Matrix candidate = failing.without_col(c);
            if (check_property(id, LinearCode::from_generator(candidate), cfg)) {
                failing = std::move(candidate);
                progress = true;
                break;
            }
        }
        if (progress) continue;
        for (std::size_t r = 0; r < failing.rows(); ++r) {
            Matrix candidate = failing.without_row(r);
            if (check_property(id, LinearCode::from_generator(candidate), cfg)) {
                failing = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return failing;
}

void render_matrix(std::ostream& os, const Matrix& m, const char* indent) {
    os << indent << "field " << m.field()->characteristic() << " " << m.field()->degree();
    for (unsigned c : m.field()->modulus()) os << " " << c;
    os << "\n";
    os << indent << m.rows() << " x " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << indent;
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << unsigned(m.idx(r, c));
        os << "\n";
    }
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json j;
    j["field"] = {{"p", m.field()->characteristic()},
                  {"m", m.field()->degree()},
                  {"modulus", m.field()->modulus()}};
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(unsigned(m.idx(r, c)));
        j["rows"].push_back(std::move(row));
    }
    j["cols"] = m.cols();
    return j;
}

}  // namespace

FuzzReport run_suite(const FuzzConfig& cfg) {
    FuzzReport report;
    report.config = cfg;
    for (PropertyId id : kAllProperties) report.stats[id] = PropertyStats{};

    auto process = [&](const Matrix& m, std::int64_t trial) {
        LinearCode code = LinearCode::from_generator(m);
        if (code.dimension() < m.rows()) ++report.rank_deficient;
        ++report.codes_sampled;
        for (PropertyId id : kAllProperties) {
            auto& st = report.stats[id];
            if (!property_applies(id, code, cfg)) {
                ++st.skipped;
                continue;
            }
            ++st.checked;
            auto failure = check_property(id, code, cfg);
            if (!failure) {
                ++st.passed;
                continue;
            }
            ++st.failed;
            ++report.failures;
            if (!report.first_failure)
                report.first_failure = Counterexample{
                    id, trial, *failure, m, shrink_counterexample(id, m, cfg)};
        }
    };

    if (cfg.inject_self_dual_fixtures) {
        auto fixtures = self_dual_fixtures();
        report.fixtures_injected = fixtures.size();
        for (std::size_t i = 0; i < fixtures.size(); ++i)
            process(fixtures[i], -static_cast<std::int64_t>(i) - 1);
    }
    for (std::uint32_t t = 0; t < cfg.trials; ++t) process(sample_matrix(cfg, t), t);
    return report;
}

std::string FuzzReport::to_text() const {
    std::ostringstream os;
    os << "fuzz report\n";
    os << "seed: " << config.seed << "\n";
    os << "trials: " << config.trials << "\n";
    os << "fields:";
    for (const auto& f : config.effective_pool()) os << " " << f->order();
    os << "\n";
    os << "n: [" << config.n_min << ", " << config.n_max << "]  k: [" << config.k_min << ", "
       << config.k_max << "]\n";
    os << "enum cap: " << config.enum_cap << "\n";
    os << "codes sampled: " << codes_sampled << " (" << fixtures_injected << " fixtures)\n";
    os << "rank-deficient samples: " << rank_deficient << "\n";
    os << "property             checked   passed   failed  skipped\n";
    for (const auto& [id, st] : stats) {
        std::string name = property_name(id);
        os << name << std::string(name.size() < 20 ? 20 - name.size() : 1, ' ');
        std::string cols[4] = {std::to_string(st.checked), std::to_string(st.passed),
                               std::to_string(st.failed), std::to_string(st.skipped)};
        for (auto& c : cols) os << std::string(c.size() < 9 ? 9 - c.size() : 1, ' ') << c;
        os << "\n";
    }
    os << "failures: " << failures << "\n";
    if (first_failure) {
        os << "first failure: property " << property_name(first_failure->property) << ", trial "
           << first_failure->trial << "\n";
        os << "  detail: " << first_failure->detail << "\n";
        os << "  original generator:\n";
        render_matrix(os, first_failure->original, "    ");
        os << "  shrunk generator:\n";
        render_matrix(os, first_failure->shrunk, "    ");
    }
    return os.str();
}

std::string FuzzReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["seed"] = config.seed;
    j["trials"] = config.trials;
    auto fields = nlohmann::ordered_json::array();
    for (const auto& f : config.effective_pool()) fields.push_back(f->order());
    j["fields"] = std::move(fields);
    j["n_min"] = config.n_min;
    j["n_max"] = config.n_max;
    j["k_min"] = config.k_min;
    j["k_max"] = config.k_max;
    j["enum_cap"] = config.enum_cap;
    j["codes_sampled"] = codes_sampled;
    j["fixtures_injected"] = fixtures_injected;
    j["rank_deficient"] = rank_deficient;
    j["properties"] = nlohmann::ordered_json::object();
    for (const auto& [id, st] : stats)
        j["properties"][property_name(id)] = {{"checked", st.checked},
                                              {"passed", st.passed},
                                              {"failed", st.failed},
                                              {"skipped", st.skipped}};
    j["failures"] = failures;
    if (first_failure) {
        j["first_failure"] = {{"property", property_name(first_failure->property)},
                              {"trial", first_failure->trial},
                              {"detail", first_failure->detail},
                              {"original", matrix_json(first_failure->original)},
                              {"shrunk", matrix_json(first_failure->shrunk)}};
    }
    return j.dump(2) + "\n";
}

}  // namespace supenum
