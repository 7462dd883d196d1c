#include "supenum/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "supenum/codefile.hpp"
#include "supenum/families.hpp"
#include "supenum/report.hpp"

namespace supenum {

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        CodeFile file = load_code_file(opt.path);
        LinearCode code = LinearCode::from_generator(file.generator);
        AnalysisReport report = build_analysis(code, opt.enum_cap);
        out << (opt.json ? report_to_json(report) : report_to_text(report));
        return report.any_fails() ? 1 : 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_dual(const DualOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        CodeFile file = load_code_file(opt.path);
        LinearCode code = LinearCode::from_generator(file.generator);
        out << emit_code_file(code.dual());
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_families(const FamiliesOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        LinearCode code = [&] {
            if (opt.name == "simplex") return simplex(Field::of_order(opt.field_order), opt.m);
            if (opt.name == "hamming") return hamming(Field::of_order(opt.field_order), opt.m);
            if (opt.name == "repetition")
                return repetition(Field::of_order(opt.field_order), opt.n);
            if (opt.name == "extended-hamming-8-4") return extended_hamming_8_4();
            throw UnknownFamily("unknown family '" + opt.name +
                                "' (try simplex, hamming, repetition, extended-hamming-8-4)");
        }();
        out << emit_code_file(code);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
    FuzzConfig cfg = opt.config;
    try {
        for (unsigned q : opt.field_orders) cfg.field_pool.push_back(Field::of_order(q));
        if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw Error("need 1 <= n-min <= n-max");
        if (cfg.k_min > cfg.k_max) throw Error("need k-min <= k-max");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    FuzzReport report = run_suite(cfg);
    out << (opt.json ? report.to_json_string() : report.to_text());
    return report.failures == 0 ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"linear block code analyzer: support distributions, enumerator polynomials "
                 "and exact duality identity checks"};
    app.name("supenum");
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "analyze a code file and verify identities");
    analyze->add_option("path", analyze_opt.path, "code file")->required();
    auto* aj = analyze->add_flag("--json", analyze_opt.json, "JSON output");
    analyze->add_flag("--text{false}", analyze_opt.json, "text output (default)")
        ->excludes(aj);
    analyze->add_option("--enum-max", analyze_opt.enum_cap,
                        "codeword enumeration cap (default 2^24)");

    DualOptions dual_opt;
    auto* dual = app.add_subcommand("dual", "emit the dual code in code-file format");
    dual->add_option("path", dual_opt.path, "code file")->required();

    FamiliesOptions fam_opt;
    auto* families = app.add_subcommand("families", "emit a classical code family member");
    families
        ->add_option("name", fam_opt.name,
                     "simplex | hamming | repetition | extended-hamming-8-4")
        ->required();
    families->add_option("--q,--p", fam_opt.field_order, "field order (prime power <= 64)");
    families->add_option("--m", fam_opt.m, "simplex/hamming dimension parameter (default 3)");
    families->add_option("--n", fam_opt.n, "repetition length (default 3)");

    FuzzOptions fuzz_opt;
    auto* fuzz = app.add_subcommand("fuzz", "run the randomized property suite");
    fuzz->add_option("--seed", fuzz_opt.config.seed, "64-bit seed (default 0)");
    fuzz->add_option("--trials", fuzz_opt.config.trials, "number of random codes (default 100)");
    fuzz->add_option("--fields", fuzz_opt.field_orders, "field orders, e.g. --fields 2,3,4")
        ->delimiter(',');
    fuzz->add_option("--n-min", fuzz_opt.config.n_min, "minimum length (default 1)");
    fuzz->add_option("--n-max", fuzz_opt.config.n_max, "maximum length (default 8)");
    fuzz->add_option("--k-min", fuzz_opt.config.k_min, "minimum sampled dimension (default 0)");
    fuzz->add_option("--k-max", fuzz_opt.config.k_max, "maximum sampled dimension (default 8)");
    fuzz->add_option("--enum-max", fuzz_opt.config.enum_cap, "codeword enumeration cap");
    fuzz->add_option("--lemma-max", fuzz_opt.config.lemma_scan_cap,
                     "q^n cap for the exhaustive character-sum scan (default 2^12)");
    fuzz->add_flag("--no-fixtures{false}", fuzz_opt.config.inject_self_dual_fixtures,
                   "do not inject the self-dual fixture codes");
    auto* fj = fuzz->add_flag("--json", fuzz_opt.json, "JSON output");
    fuzz->add_flag("--text{false}", fuzz_opt.json, "text output (default)")->excludes(fj);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (analyze->parsed()) return cmd_analyze(analyze_opt, out, err);
    if (dual->parsed()) return cmd_dual(dual_opt, out, err);
    if (families->parsed()) return cmd_families(fam_opt, out, err);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_opt, out, err);
    return 2;
}

}  // namespace supenum
