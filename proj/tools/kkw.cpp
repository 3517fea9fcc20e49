// Command-line front end: kkw verify | constants | interior.
// Exit status: 0 all hard checks match, 2 a hard check mismatched (the
// report names it), 1 usage or input error.

#include "kkw/verify_run.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

struct Options {
    std::string n_list = "6";
    int jets = 1;
    std::uint64_t seed = 1;
    std::string profile = "diagonal";
    std::string mode = "all";
    std::string jet_file;
    std::string invariants;
    std::string out;
    std::string format = "json";
    unsigned threads = 0;
    bool timing = false;
};

int emit(const kkw::RunResult& result, const Options& o) {
    const std::string text =
        o.format == "markdown" ? kkw::render_markdown(result.report) : result.report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        kkw::write_file_atomically(o.out, text);
    }
    return result.exit_code;
}

kkw::RunConfig to_config(const Options& o, kkw::RunMode mode) {
    kkw::RunConfig cfg;
    cfg.n_list = kkw::parse_n_list(o.n_list);
    if (o.jets < 1) throw std::invalid_argument("--jets must be positive");
    cfg.jets_per_n = o.jets;
    cfg.seed = o.seed;
    cfg.profile = kkw::parse_profile(o.profile);
    cfg.mode = mode;
    if (!o.jet_file.empty()) cfg.jet_file = o.jet_file;
    if (!o.invariants.empty()) cfg.invariants_file = o.invariants;
    cfg.format = o.format == "markdown" ? kkw::ReportFormat::markdown : kkw::ReportFormat::json;
    cfg.threads = kkw::resolve_threads(o.threads);
    cfg.timing = o.timing;
    return cfg;
}

void add_output_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out, "Write the report here instead of stdout");
    cmd->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the boundary residue computation"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Run verification campaigns");
    verify->add_option("--mode", o.mode, "constants, pipeline, interior or all")
        ->check(CLI::IsMember({"constants", "pipeline", "interior", "all"}));
    verify->add_option("--n", o.n_list, "Dimensions, e.g. 6,8,10 or 6..16");
    verify->add_option("--jets", o.jets, "Random jets per dimension");
    verify->add_option("--seed", o.seed, "First jet seed");
    verify->add_option("--profile", o.profile, "diagonal or conjugated")->check(CLI::IsMember({"diagonal", "conjugated"}));
    verify->add_option("--jet-file", o.jet_file, "Use this jet instead of random ones");
    verify->add_option("--invariants", o.invariants, "Interior invariants file");
    verify->add_option("--threads", o.threads, "Worker threads (0: hardware; capped by KKW_THREADS)");
    verify->add_flag("--timing", o.timing, "Include wall-clock times in the report");
    add_output_options(verify, o);

    auto* constants = app.add_subcommand("constants", "Recompute the named constants against quadrature");
    constants->add_option("--n", o.n_list, "Dimensions, e.g. 6..16");
    add_output_options(constants, o);

    auto* interior = app.add_subcommand("interior", "Evaluate the interior density");
    interior->add_option("--invariants", o.invariants, "Invariants file {RJJ, G1..G5, s}")->required();
    interior->add_option("--n", o.n_list, "Dimensions");
    add_output_options(interior, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (constants->parsed()) {
            if (constants->count("--n") == 0) o.n_list = "6..16";
            return emit(kkw::run(to_config(o, kkw::RunMode::constants)), o);
        }
        if (interior->parsed()) return emit(kkw::run(to_config(o, kkw::RunMode::interior)), o);
        return emit(kkw::run(to_config(o, kkw::parse_mode(o.mode))), o);
    } catch (const std::exception& e) {
        std::cerr << "kkw: " << e.what() << "\n";
        return 1;
    }
}
