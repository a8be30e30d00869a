#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmreg/errors.hpp"
#include "cmreg/io.hpp"
#include "cmreg/selftest.hpp"

namespace {

using namespace cmreg;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_spec("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const nlohmann::json& doc, const std::string& report_path) {
    const std::string text = canonical_dump(doc);
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report_path);
        if (!out) throw error("cannot open report file: " + report_path);
        out << text;
    }
}

int run_analyze(const std::string& spec_path, const std::string& report_path,
                const std::vector<int>& levels, int max_lex_degree) {
    InputSpec spec = parse_input_text(slurp(spec_path));
    if (!levels.empty()) spec.options.levels = levels;
    if (max_lex_degree > 0) spec.options.max_lex_degree = max_lex_degree;
    const Report rep = analyze(spec);
    emit(report_to_json(rep), report_path);
    if (!report_path.empty()) {
        for (const auto& v : rep.verdicts) {
            const char* status = v.status == Verdict::Status::Pass ? "pass"
                               : v.status == Verdict::Status::Fail ? "FAIL" : "no-oracle";
            std::cerr << status << "  " << v.claim << "\n";
        }
    }
    return rep.exit_code();
}

int run_lexify(const std::string& spec_path, int max_lex_degree) {
    InputSpec spec = parse_input_text(slurp(spec_path));
    if (max_lex_degree > 0) spec.options.max_lex_degree = max_lex_degree;
    const FamilySpec& source =
        spec.family.kind == FamilySpec::Kind::LexOf ? *spec.family.inner : spec.family;
    const HilbertSeries hs = series_of(source);
    const ReducedSeries rs = reduce(hs);
    int M = spec.options.max_lex_degree;
    const MonomialIdeal lex = lexify(source, M);
    std::cout << "vars: " << lex.n << "\n";
    std::cout << "series numerator: " << hs.numerator.str() << "\n";
    std::cout << "dimension: " << rs.d << "\n";
    int max_degree = 0;
    for (const auto& g : lex.gens) max_degree = std::max(max_degree, g.degree());
    for (int m = 1; m <= max_degree; ++m) {
        std::string line;
        for (const auto& g : lex.gens) {
            if (g.degree() != m) continue;
            if (!line.empty()) line += ", ";
            line += g.str();
        }
        if (!line.empty()) std::cout << "degree " << m << ": " << line << "\n";
    }
    if (lex.gens.empty()) std::cout << "zero ideal\n";
    return 0;
}

int run_sweep(const SweepConfig& cfg, const std::string& report_path) {
    const SweepResult res = sweep(cfg);
    emit(sweep_to_json(res), report_path);
    return res.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert-series invariants and Castelnuovo-Mumford regularity bounds"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string report_path;
    std::vector<int> levels;
    int max_lex_degree = -1;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one input spec");
    analyze_cmd->add_option("spec", spec_path, "input spec file (JSON)")->required();
    analyze_cmd->add_option("--report", report_path, "write the report here instead of stdout");
    analyze_cmd->add_option("--levels", levels, "regularity levels p to report")->delimiter(',');
    analyze_cmd->add_option("--max-lex-degree", max_lex_degree, "truncation degree for lexifications");

    auto* lexify_cmd = app.add_subcommand("lexify", "Print the lex-segment ideal of the spec's family");
    lexify_cmd->add_option("spec", spec_path, "input spec file (JSON)")->required();
    lexify_cmd->add_option("--max-lex-degree", max_lex_degree, "truncation degree");

    SweepConfig cfg;
    auto* sweep_cmd = app.add_subcommand("sweep", "Random-ideal check harness");
    sweep_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
    sweep_cmd->add_option("--count", cfg.count, "number of ideals")->required();
    sweep_cmd->add_option("--n-min", cfg.n_min, "minimum variable count");
    sweep_cmd->add_option("--n-max", cfg.n_max, "maximum variable count");
    sweep_cmd->add_option("--max-deg", cfg.max_degree, "maximum generator degree");
    sweep_cmd->add_option("--max-gens", cfg.max_gens, "maximum generator count");
    sweep_cmd->add_flag("--stable-only", cfg.stable_only, "Borel-close every ideal first");
    sweep_cmd->add_option("--report", report_path, "write the result here instead of stdout");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the shipped fixtures and property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_analyze(spec_path, report_path, levels, max_lex_degree);
        if (lexify_cmd->parsed()) return run_lexify(spec_path, max_lex_degree);
        if (sweep_cmd->parsed()) return run_sweep(cfg, report_path);
        if (selftest_cmd->parsed()) return run_selftest(std::cout) == 0 ? 0 : 1;
    } catch (const invalid_spec& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const internal_inconsistency& ex) {
        std::cerr << "internal inconsistency: " << ex.what() << "\n";
        return 3;
    } catch (const error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "unexpected error: " << ex.what() << "\n";
        return 3;
    }
    return 0;
}
