// lefschetz-lab: exact certificates for 0-dimensional complete intersections.
//
//   analyze  full pipeline on a system file
//   milnor   gradient-system pipeline for a single form
//   aci      almost-complete-intersection batch demonstrator
//   sweep    random-system sweep with screening-field escalation
//
// Exit codes: 0 success, 1 non-complete-intersection input, 2 internal
// consistency violation, 3 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lefschetz/pipeline.hpp"

namespace {

using lefschetz::AciOptions;
using lefschetz::AnalyzeOptions;
using lefschetz::FieldConfig;
using lefschetz::OrderedJson;
using lefschetz::SweepOptions;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw lefschetz::Error(std::string("bad ") + what + " entry '" + item + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw lefschetz::Error(std::string("empty ") + what + " list");
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lefschetz::Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_report(const OrderedJson& report, const std::string& out_path, bool to_stdout) {
    const std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw lefschetz::Error("cannot open output file '" + out_path + "'");
        out << text;
    }
    if (to_stdout) std::cout << text;
}

struct CommonFlags {
    std::string field = "q";
    std::uint64_t seed = 1;
    int coeff_bound = 50;
    int trials = 20;
    std::string k_list = "1";
    std::string out_path;
    bool json = false;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--field", f.field, "coefficient field: q or fp:<odd prime>");
    cmd->add_option("--seed", f.seed, "64-bit seed for all randomness");
    cmd->add_option("--coeff-bound", f.coeff_bound, "sampling box half-width over the rationals");
    cmd->add_option("--trials", f.trials, "SLP witness trial budget");
    cmd->add_option("--out", f.out_path, "write the JSON report to this path");
    cmd->add_flag("--json", f.json, "print the full JSON report to stdout");
    cmd->add_flag("--no-timing", f.no_timing, "null out the timing block (byte-stable output)");
}

AnalyzeOptions make_analyze_options(const CommonFlags& f) {
    AnalyzeOptions opt;
    opt.field = FieldConfig::parse(f.field);
    opt.k_list = parse_int_list(f.k_list, "k");
    opt.trials = f.trials;
    opt.seed = f.seed;
    opt.coeff_bound = f.coeff_bound;
    opt.with_timing = !f.no_timing;
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lefschetz / associated-form certificates for complete intersections"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, milnor_flags, aci_flags, sweep_flags;

    auto* analyze = app.add_subcommand("analyze", "run the full pipeline on a system file");
    std::string analyze_input;
    analyze->add_option("--input", analyze_input, "system file path, or - for stdin")->required();
    analyze->add_option("--k", analyze_flags.k_list, "comma-separated SLP degrees (default 1)");
    add_common(analyze, analyze_flags);

    auto* milnor = app.add_subcommand("milnor", "pipeline on the gradient system of one form");
    std::string milnor_expr, milnor_vars = "x,y,z", milnor_input;
    milnor->add_option("--expr", milnor_expr, "the form, e.g. 'x^3+y^3+z^3-6*x*y*z'");
    milnor->add_option("--vars", milnor_vars, "comma-separated variable names (default x,y,z)");
    milnor->add_option("--input", milnor_input, "system file with a single 'f: ...' line");
    milnor->add_option("--k", milnor_flags.k_list, "comma-separated SLP degrees (default 1)");
    add_common(milnor, milnor_flags);

    auto* aci = app.add_subcommand("aci", "sampled almost-complete-intersection batch");
    std::string aci_multidegree = "2,2,2";
    int aci_samples = 50;
    int aci_line_trials = 100;
    aci->add_option("--multidegree", aci_multidegree, "e.g. 2,2,3 (nondecreasing, each >= 2)");
    aci->add_option("--samples", aci_samples, "number of sampled fixtures");
    aci->add_option("--line-trials", aci_line_trials, "random linear forms checked per fixture");
    add_common(aci, aci_flags);

    auto* sweep = app.add_subcommand("sweep", "random complete-intersection sweep");
    std::string sweep_multidegree = "2,2,2";
    int sweep_samples = 100;
    int sweep_jobs = 1;
    sweep->add_option("--multidegree", sweep_multidegree, "e.g. 2,2,2 (nondecreasing, each >= 2)");
    sweep->add_option("--samples", sweep_samples, "number of accepted CI samples");
    sweep->add_option("--jobs", sweep_jobs, "worker threads (results independent of this)");
    sweep_flags.field = "fp:" + std::to_string(lefschetz::kDefaultScreeningPrime);
    sweep_flags.seed = 42;
    sweep_flags.coeff_bound = 10;
    add_common(sweep, sweep_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const auto text = lefschetz::parse_system_text(read_input(analyze_input));
            const auto result = lefschetz::analyze_system(text, make_analyze_options(analyze_flags));
            write_report(result.report, analyze_flags.out_path, analyze_flags.out_path.empty());
            return result.exit_code;
        }

        if (milnor->parsed()) {
            const AnalyzeOptions opt = make_analyze_options(milnor_flags);
            std::string expr = milnor_expr;
            std::vector<std::string> vars;
            if (!milnor_input.empty()) {
                const auto text = lefschetz::parse_system_text(read_input(milnor_input));
                if (text.entries.size() != 1)
                    throw lefschetz::Error("milnor --input expects exactly one 'f: ...' line");
                expr = text.entries[0].second;
                vars = text.vars;
            } else if (!expr.empty()) {
                std::stringstream ss(milnor_vars);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item.empty())
                        throw lefschetz::Error("empty variable name in --vars");
                    vars.push_back(item);
                }
            } else {
                throw lefschetz::Error("milnor needs --expr or --input");
            }
            const auto result = lefschetz::analyze_milnor(expr, vars, opt);
            write_report(result.report, milnor_flags.out_path, milnor_flags.out_path.empty());
            return result.exit_code;
        }

        if (aci->parsed()) {
            AciOptions opt;
            opt.degrees = parse_int_list(aci_multidegree, "multidegree");
            opt.n = opt.degrees.size();
            opt.samples = aci_samples;
            opt.field = FieldConfig::parse(aci_flags.field);
            opt.seed = aci_flags.seed;
            opt.coeff_bound = aci_flags.coeff_bound;
            opt.line_trials = aci_line_trials;
            opt.with_timing = !aci_flags.no_timing;
            const auto result = lefschetz::run_aci(opt);
            write_report(result.report, aci_flags.out_path, aci_flags.json);
            if (!aci_flags.json) {
                std::cout << "aci multidegree=" << aci_multidegree << " samples=" << opt.samples
                          << " seed=" << opt.seed << " field=" << opt.field.to_string() << "\n"
                          << "claims_pass_rate=" << result.report["claims_pass_rate"].dump()
                          << " escape_failures=" << result.stats.escape_failures
                          << " veronese_avoidance_failures="
                          << result.stats.veronese_avoidance_failures << "\n";
            }
            return result.exit_code;
        }

        if (sweep->parsed()) {
            SweepOptions opt;
            opt.degrees = parse_int_list(sweep_multidegree, "multidegree");
            opt.n = opt.degrees.size();
            opt.samples = sweep_samples;
            opt.field = FieldConfig::parse(sweep_flags.field);
            opt.seed = sweep_flags.seed;
            opt.coeff_bound = sweep_flags.coeff_bound;
            opt.trials = sweep_flags.trials;
            opt.jobs = sweep_jobs;
            opt.with_timing = !sweep_flags.no_timing;
            const auto result = lefschetz::run_sweep(opt);
            write_report(result.report, sweep_flags.out_path, sweep_flags.json);
            if (!sweep_flags.json) {
                std::cout << "sweep multidegree=" << sweep_multidegree << " samples=" << opt.samples
                          << " seed=" << opt.seed << " field=" << opt.field.to_string() << "\n"
                          << "ci_rate=" << result.report["ci_rate"].dump()
                          << " condition1_rate=" << result.report["condition1_rate"].dump()
                          << " condition2_rate=" << result.report["condition2_rate"].dump()
                          << " slp1_rate=" << result.report["slp1_rate"].dump() << "\n"
                          << "equivalence_violations=" << result.stats.equivalence_violations
                          << " implication_violations=" << result.stats.implication_violations
                          << "\n";
            }
            return result.exit_code;
        }
    } catch (const lefschetz::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const lefschetz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
