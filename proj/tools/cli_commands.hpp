#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace mbqc::cli {

inline constexpr const char* kVersion = "0.1.0";

// exit codes: 0 ok, 1 verification failed, 2 usage/parse error, 3 numerical
enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kNumericalError = 3 };

struct PatternRunOpts {
    std::string pattern_file;
    std::string input_spec = "+";
    std::string postselect;  // bit string, empty = sample
    std::uint64_t seed = 0;
    std::map<std::string, double> overrides;
    std::string format = "csv";
};

struct ExtractOpOpts {
    std::string pattern_file;
    std::string outcomes;
    std::map<std::string, double> overrides;
    std::string format = "csv";
};

struct SweepOpts {
    std::string kind;  // sop | ite | feedback | estimator
    double eps_min = 0.0;
    double eps_max = 1.5707963267948966;
    int eps_steps = 16;
    double epsilon = 0.25;  // ite tilt
    int steps = 8;          // ite/feedback depth
    double beta = 1.5707963267948966;
    long shots = 0;           // feedback MC trajectories (0 = analytic only)
    long swap_shots = 20000;  // estimator swap-test shots
    int unitaries = 40;
    int shots_per_unitary = 500;
    int repeats = 10;
    std::uint64_t seed = 0;
};

struct ZxCheckOpts {
    std::vector<std::string> files;  // 0 (builtin) or 2 (pair)
    std::string builtin;             // teleport | fig7 | bubble
    std::string postselect = "00";
    double epsilon = 0.25;
    std::map<std::string, double> overrides;
};

int cmd_pattern_run(const PatternRunOpts& opts, std::ostream& out, std::ostream& err);
int cmd_extract_op(const ExtractOpOpts& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOpts& opts, std::ostream& out, std::ostream& err);
int cmd_zx_check(const ZxCheckOpts& opts, std::ostream& out, std::ostream& err);

/// Full argv interface used by main(); dispatches to the commands above and
/// honors --out redirection.
int run_main(int argc, const char* const* argv);

}  // namespace mbqc::cli
