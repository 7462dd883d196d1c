#include "supenum/report.hpp"

#include <sstream>

#include <json.hpp>

namespace supenum {

namespace {
using Json = nlohmann::ordered_json;
}

std::string verdict_state_name(Verdict::State s) {
    switch (s) {
        case Verdict::State::kHolds: return "HOLDS";
        case Verdict::State::kFails: return "FAILS";
        case Verdict::State::kSkipped: return "SKIPPED";
    }
    return "SKIPPED";
}

bool AnalysisReport::any_fails() const {
    for (const Verdict* v : {&total_weight, &support_formula, &support_identity,
                             &self_dual_criterion})
        if (v->state == Verdict::State::kFails) return true;
    return false;
}

AnalysisReport build_analysis(const LinearCode& code, std::uint64_t cap) {
    AnalysisReport r;
    const Field& f = *code.field();
    r.p = f.characteristic();
    r.m = f.degree();
    r.modulus = f.modulus();
    r.n = code.length();
    r.k = code.dimension();
    r.code_size = code.size();

    LinearCode dual = code.dual();
    r.dual_k = dual.dimension();
    r.self_dual = code.is_self_dual();

    const bool enumerable = code.size_if_within(cap).has_value();
    const std::string cap_reason =
        "enumeration above cap (" + std::to_string(f.order()) + "^" + std::to_string(r.k) + " > " +
        std::to_string(cap) + ")";

    if (enumerable) {
        if (r.k >= 1) r.min_distance = code.min_distance(cap);
        WeightDistribution w = weight_distribution(code, cap);
        r.weight_counts = w.counts;
        r.weight_poly = weight_enumerator(w);
    }

    SupportDistribution s = support_distribution(code, cap);
    r.support_counts = s.counts;
    r.support_poly = support_enumerator(s);
    r.dual_support_counts = support_distribution(dual, cap).counts;

    // total-weight identity: needs the weight distribution
    if (enumerable) {
        auto tw = total_weight_identity(code, cap);
        r.total_weight.state = tw.holds ? Verdict::State::kHolds : Verdict::State::kFails;
    } else {
        r.total_weight = {Verdict::State::kSkipped, cap_reason};
    }

    // per-coordinate support formula: enumeration vs closed form
    if (enumerable) {
        bool ok = support_distribution_enum(code, cap) == support_distribution_closed(code);
        r.support_formula.state = ok ? Verdict::State::kHolds : Verdict::State::kFails;
    } else {
        r.support_formula = {Verdict::State::kSkipped, cap_reason};
    }

    auto identity = verify_support_identity(code, cap);
    r.identity_lhs = identity.lhs;
    r.identity_rhs = identity.rhs;
    r.neither_coords = identity.neither_coords;
    r.support_identity.state =
        identity.holds ? Verdict::State::kHolds : Verdict::State::kFails;

    auto criterion = verify_self_dual_criterion(code, cap);
    r.criterion_lhs = criterion.lhs;
    r.criterion_rhs = criterion.rhs;
    r.criterion_holds = criterion.criterion_holds;
    if (r.self_dual)
        r.self_dual_criterion.state =
            criterion.criterion_holds ? Verdict::State::kHolds : Verdict::State::kFails;
    else
        r.self_dual_criterion = {Verdict::State::kSkipped, "code is not self-dual"};

    return r;
}

namespace {

Json poly_json(const RationalPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exp"] = e;
        term["num"] = Int(boost::multiprecision::numerator(c)).str();
        term["den"] = Int(boost::multiprecision::denominator(c)).str();
        arr.push_back(std::move(term));
    }
    return arr;
}

RationalPoly poly_from_json(const Json& arr) {
    RationalPoly p;
    for (const auto& term : arr) {
        Int num(term.at("num").get<std::string>());
        Int den(term.at("den").get<std::string>());
        p.set(term.at("exp").get<std::size_t>(), Rational(num, den));
    }
    return p;
}

Json counts_json(const std::vector<Int>& counts) {
    Json arr = Json::array();
    for (const auto& c : counts) arr.push_back(c.str());
    return arr;
}

std::vector<Int> counts_from_json(const Json& arr) {
    std::vector<Int> out;
    for (const auto& c : arr) out.emplace_back(c.get<std::string>());
    return out;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["state"] = verdict_state_name(v.state);
    j["reason"] = v.reason;
    return j;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    std::string s = j.at("state").get<std::string>();
    v.state = s == "HOLDS"   ? Verdict::State::kHolds
              : s == "FAILS" ? Verdict::State::kFails
                             : Verdict::State::kSkipped;
    v.reason = j.at("reason").get<std::string>();
    return v;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
    Json j;
    j["field"] = {{"p", r.p}, {"m", r.m}, {"modulus", r.modulus}};
    j["n"] = r.n;
    j["k"] = r.k;
    j["dual_k"] = r.dual_k;
    j["code_size"] = r.code_size.str();
    j["min_distance"] = r.min_distance ? Json(*r.min_distance) : Json(nullptr);
    j["self_dual"] = r.self_dual;
    j["weight_distribution"] = r.weight_counts ? counts_json(*r.weight_counts) : Json(nullptr);
    j["support_distribution"] = counts_json(r.support_counts);
    j["dual_support_distribution"] = counts_json(r.dual_support_counts);
    j["weight_enumerator"] = r.weight_poly ? poly_json(*r.weight_poly) : Json(nullptr);
    j["support_enumerator"] = poly_json(r.support_poly);
    j["identity"] = {{"lhs", poly_json(r.identity_lhs)},
                     {"rhs", poly_json(r.identity_rhs)},
                     {"neither_coords", r.neither_coords}};
    j["criterion"] = {{"lhs", poly_json(r.criterion_lhs)},
                      {"rhs", poly_json(r.criterion_rhs)},
                      {"holds", r.criterion_holds}};
    j["verdicts"] = {{"total_weight", verdict_json(r.total_weight)},
                     {"support_formula", verdict_json(r.support_formula)},
                     {"support_identity", verdict_json(r.support_identity)},
                     {"self_dual_criterion", verdict_json(r.self_dual_criterion)}};
    return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& json_text) {
    Json j = Json::parse(json_text);
    AnalysisReport r;
    r.p = j.at("field").at("p").get<unsigned>();
    r.m = j.at("field").at("m").get<unsigned>();
    r.modulus = j.at("field").at("modulus").get<std::vector<unsigned>>();
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.dual_k = j.at("dual_k").get<std::size_t>();
    r.code_size = Int(j.at("code_size").get<std::string>());
    if (!j.at("min_distance").is_null()) r.min_distance = j.at("min_distance").get<std::size_t>();
    r.self_dual = j.at("self_dual").get<bool>();
    if (!j.at("weight_distribution").is_null())
        r.weight_counts = counts_from_json(j.at("weight_distribution"));
    r.support_counts = counts_from_json(j.at("support_distribution"));
    r.dual_support_counts = counts_from_json(j.at("dual_support_distribution"));
    if (!j.at("weight_enumerator").is_null())
        r.weight_poly = poly_from_json(j.at("weight_enumerator"));
    r.support_poly = poly_from_json(j.at("support_enumerator"));
    r.identity_lhs = poly_from_json(j.at("identity").at("lhs"));
    r.identity_rhs = poly_from_json(j.at("identity").at("rhs"));
    r.neither_coords = j.at("identity").at("neither_coords").get<std::vector<std::size_t>>();
    r.criterion_lhs = poly_from_json(j.at("criterion").at("lhs"));
    r.criterion_rhs = poly_from_json(j.at("criterion").at("rhs"));
    r.criterion_holds = j.at("criterion").at("holds").get<bool>();
    r.total_weight = verdict_from_json(j.at("verdicts").at("total_weight"));
    r.support_formula = verdict_from_json(j.at("verdicts").at("support_formula"));
    r.support_identity = verdict_from_json(j.at("verdicts").at("support_identity"));
    r.self_dual_criterion = verdict_from_json(j.at("verdicts").at("self_dual_criterion"));
    return r;
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    unsigned q = 1;
    for (unsigned i = 0; i < r.m; ++i) q *= r.p;
    os << "code: [" << r.n << ", " << r.k << "] over F_" << q << ", " << r.code_size.str()
       << " codewords\n";
    if (r.min_distance)
        os << "minimum distance: " << *r.min_distance << "\n";
    else
        os << "minimum distance: (not computed)\n";
    os << "dual: [" << r.n << ", " << r.dual_k << "]\n";
    os << "self-dual: " << (r.self_dual ? "yes" : "no") << "\n";

    if (r.weight_counts) {
        os << "weight distribution:";
        for (std::size_t w = 0; w < r.weight_counts->size(); ++w)
            if ((*r.weight_counts)[w] != 0)
                os << " A_" << w << "=" << (*r.weight_counts)[w].str();
        os << "\n";
        os << "W_C(z) = " << r.weight_poly->to_string() << "\n";
    } else {
        os << "weight distribution: (enumeration above cap)\n";
    }

    os << "support distribution:";
    for (const auto& s : r.support_counts) os << " " << s.str();
    os << "\n";
    os << "dual support distribution:";
    for (const auto& s : r.dual_support_counts) os << " " << s.str();
    os << "\n";
    os << "S_C(z) = " << r.support_poly.to_string() << "\n";

    os << "coordinates with e_i outside code and dual:";
    if (r.neither_coords.empty()) os << " (none)";
    for (auto i : r.neither_coords) os << " " << i;
    os << "\n";

    os << "duality identity: lhs = " << r.identity_lhs.to_string() << "\n";
    os << "                  rhs = " << r.identity_rhs.to_string() << "\n";
    os << "self-dual criterion: lhs = " << r.criterion_lhs.to_string() << "\n";
    os << "                     rhs = " << r.criterion_rhs.to_string() << "\n";
    os << "criterion holds: " << (r.criterion_holds ? "yes" : "no") << "\n";

    os << "verdicts:\n";
    auto line = [&](const char* name, const Verdict& v) {
        std::string n(name);
        os << "  " << n << std::string(n.size() < 22 ? 22 - n.size() : 1, ' ')
           << verdict_state_name(v.state);
        if (!v.reason.empty()) os << " (" << v.reason << ")";
        os << "\n";
    };
    line("total-weight", r.total_weight);
    line("support-formula", r.support_formula);
    line("support-identity", r.support_identity);
    line("self-dual-criterion", r.self_dual_criterion);
    return os.str();
}

}  // namespace supenum
