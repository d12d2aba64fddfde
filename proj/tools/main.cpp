#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli_commands.hpp"

namespace {

// stream target honoring --out
struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path);
        if (!file) return false;
        stream = &file;
        return true;
    }
};

}  // namespace

int mbqc::cli::run_main(int argc, const char* const* argv) {
    CLI::App app{"measurement-based quantum computation simulator and verifier"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write command output to a file")->capture_default_str();

    PatternRunOpts run_opts;
    double epsilon_override = 0.0, phi_override = 0.0;
    auto* run = app.add_subcommand("pattern-run", "run a measurement pattern on an input state");
    run->add_option("pattern", run_opts.pattern_file, "pattern file")->required();
    run->add_option("--input", run_opts.input_spec,
                    "input state: chars 0 1 + - r l, or bloch:beta,phi");
    run->add_option("--postselect", run_opts.postselect, "outcome bits (empty = sample)");
    run->add_option("--seed", run_opts.seed, "sampling seed");
    auto* run_eps = run->add_option("--epsilon", epsilon_override, "override the epsilon parameter");
    auto* run_phi = run->add_option("--phi", phi_override, "override the phi parameter");
    run->add_option("--format", run_opts.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    ExtractOpOpts ex_opts;
    auto* ex = app.add_subcommand("extract-op", "extract the induced operator of a pattern");
    ex->add_option("pattern", ex_opts.pattern_file, "pattern file")->required();
    ex->add_option("--outcomes", ex_opts.outcomes, "measurement outcome bits")->required();
    auto* ex_eps = ex->add_option("--epsilon", epsilon_override, "override the epsilon parameter");
    auto* ex_phi = ex->add_option("--phi", phi_override, "override the phi parameter");
    ex->add_option("--format", ex_opts.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    SweepOpts sweep_opts;
    auto* sw = app.add_subcommand("sweep", "emit a CSV sweep table");
    sw->add_option("kind", sweep_opts.kind, "sop|ite|feedback|estimator")->required();
    sw->add_option("--eps-min", sweep_opts.eps_min, "tilt grid start");
    sw->add_option("--eps-max", sweep_opts.eps_max, "tilt grid end");
    sw->add_option("--eps-steps", sweep_opts.eps_steps, "tilt grid points");
    sw->add_option("--epsilon", sweep_opts.epsilon, "fixed tilt (ite sweep)");
    sw->add_option("--steps", sweep_opts.steps, "chain length / attempt depth");
    sw->add_option("--beta", sweep_opts.beta, "input Bloch polar angle");
    sw->add_option("--shots", sweep_opts.shots, "Monte Carlo trajectories (feedback)");
    sw->add_option("--swap-shots", sweep_opts.swap_shots, "swap-test shots (estimator)");
    sw->add_option("--unitaries", sweep_opts.unitaries, "random unitaries M (estimator)");
    sw->add_option("--shots-per-unitary", sweep_opts.shots_per_unitary,
                   "measurements K per unitary (estimator)");
    sw->add_option("--repeats", sweep_opts.repeats, "estimator repeats");
    sw->add_option("--seed", sweep_opts.seed, "master seed");

    ZxCheckOpts zx_opts;
    auto* zx = app.add_subcommand("zx-check", "verify diagram equivalence");
    zx->add_option("files", zx_opts.files, "two diagram files")->expected(0, 2);
    zx->add_option("--builtin", zx_opts.builtin, "teleport|fig7|bubble");
    zx->add_option("--postselect", zx_opts.postselect, "outcome bits for builtin teleport");
    auto* zx_eps = zx->add_option("--epsilon", zx_opts.epsilon, "tilt for builtin fig7/bubble");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    OutputTarget target;
    if (!target.open(out_path)) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kUsageError;
    }

    if (app.got_subcommand(run)) {
        if (run_eps->count()) run_opts.overrides["epsilon"] = epsilon_override;
        if (run_phi->count()) run_opts.overrides["phi"] = phi_override;
        return cmd_pattern_run(run_opts, *target.stream, std::cerr);
    }
    if (app.got_subcommand(ex)) {
        if (ex_eps->count()) ex_opts.overrides["epsilon"] = epsilon_override;
        if (ex_phi->count()) ex_opts.overrides["phi"] = phi_override;
        return cmd_extract_op(ex_opts, *target.stream, std::cerr);
    }
    if (app.got_subcommand(sw)) {
        return cmd_sweep(sweep_opts, *target.stream, std::cerr);
    }
    if (app.got_subcommand(zx)) {
        if (zx_eps->count()) zx_opts.overrides["epsilon"] = zx_opts.epsilon;
        return cmd_zx_check(zx_opts, *target.stream, std::cerr);
    }
    return kUsageError;
}

int main(int argc, char** argv) { return mbqc::cli::run_main(argc, argv); }
