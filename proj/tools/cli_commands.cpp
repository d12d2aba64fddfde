#include "cli_commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "mbqc/engine.hpp"
#include "mbqc/estimators.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/gates.hpp"
#include "mbqc/linalg.hpp"
#include "mbqc/pattern_io.hpp"
#include "mbqc/protocols.hpp"
#include "mbqc/zx_io.hpp"
#include "mbqc/zx_mbqc.hpp"
#include "mbqc/zx_rules.hpp"

namespace mbqc::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string manifest_line(const std::string& command, const json& params,
                          std::uint64_t seed) {
    json m;
    m["command"] = command;
    m["params"] = params;
    m["seed"] = seed;
    m["version"] = kVersion;
    m["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    return "# manifest: " + m.dump();
}

std::vector<int> parse_bits(const std::string& s) {
    std::vector<int> bits;
    for (char c : s) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else throw std::runtime_error("outcome string must be over {0,1}");
    }
    return bits;
}

StateVector parse_input_state(const std::string& spec) {
    if (spec.rfind("bloch:", 0) == 0) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("bloch input needs beta,varphi");
        }
        const double beta = std::stod(spec.substr(6, comma - 6));
        const double varphi = std::stod(spec.substr(comma + 1));
        return BlochState{beta, varphi}.to_state();
    }
    const double r = 1.0 / std::sqrt(2.0);
    StateVector state(0);
    for (char c : spec) {
        std::vector<cplx> amps;
        switch (c) {
            case '0': amps = {1.0, 0.0}; break;
            case '1': amps = {0.0, 1.0}; break;
            case '+': amps = {r, r}; break;
            case '-': amps = {r, -r}; break;
            case 'r': amps = {r, cplx{0.0, r}}; break;
            case 'l': amps = {r, cplx{0.0, -r}}; break;
            default:
                throw std::runtime_error(std::string("unknown input qubit '") + c +
                                         "' (use 0 1 + - r l or bloch:beta,phi)");
        }
        state = tensor_states(state, StateVector::from_amplitudes(1, amps));
    }
    return state;
}

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int cmd_pattern_run(const PatternRunOpts& opts, std::ostream& out, std::ostream& err) {
    MeasurementPattern pattern = [&] {
        try {
            return load_pattern_file(opts.pattern_file, opts.overrides);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            throw ExitCode(kUsageError);
        }
    }();

    try {
        const StateVector input = parse_input_state(opts.input_spec);
        const OutcomePolicy policy = opts.postselect.empty()
                                         ? OutcomePolicy::sample(opts.seed)
                                         : OutcomePolicy::postselect(parse_bits(opts.postselect));
        const RunRecord rec = run_pattern(pattern, input, policy);

        json params = {{"pattern", opts.pattern_file},
                       {"input", opts.input_spec},
                       {"postselect", opts.postselect}};
        if (opts.format == "json") {
            json j;
            j["outcomes"] = rec.outcomes;
            j["joint_probability"] = rec.joint_probability;
            j["output_amplitudes"] = json::array();
            for (const auto& a : rec.output_state.amplitudes()) {
                j["output_amplitudes"].push_back({a.real(), a.imag()});
            }
            out << j.dump(2) << "\n";
        } else {
            out << manifest_line("pattern-run", params, opts.seed) << "\n";
            out << "outcomes,";
            for (int s : rec.outcomes) out << s;
            out << "\n";
            out << "joint_probability," << fmt(rec.joint_probability) << "\n";
            out << "# columns: basis_index,re,im\n";
            for (std::uint64_t i = 0; i < rec.output_state.dim(); ++i) {
                const cplx a = rec.output_state.amp(i);
                out << i << ',' << fmt(a.real()) << ',' << fmt(a.imag()) << "\n";
            }
        }
        return kOk;
    } catch (const ExitCode& code) {
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}

int cmd_extract_op(const ExtractOpOpts& opts, std::ostream& out, std::ostream& err) {
    MeasurementPattern pattern = [&] {
        try {
            return load_pattern_file(opts.pattern_file, opts.overrides);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            throw ExitCode(kUsageError);
        }
    }();

    try {
        const auto outcomes = parse_bits(opts.outcomes);
        const LinearMap kraus = extract_kraus(pattern, outcomes);
        const auto [choi_map, sd] = operator_from_choi(pattern, outcomes);
        const bool agree = equal_up_to_scalar(kraus.matrix, choi_map.matrix, 1e-9);
        const double s_op = vn_entropy(sd.coefficients);
        const double s2_op = renyi2_entropy(sd.coefficients);

        json params = {{"pattern", opts.pattern_file}, {"outcomes", opts.outcomes}};
        if (opts.format == "json") {
            json j;
            j["matrix"] = matrix_json(choi_map.matrix);
            j["s_op"] = s_op;
            j["s2_op"] = s2_op;
            j["kraus_choi_agreement"] = agree;
            out << j.dump(2) << "\n";
        } else {
            out << manifest_line("extract-op", params, 0) << "\n";
            out << "# unit-Frobenius operator, columns: row,col,re,im\n";
            for (std::size_t i = 0; i < choi_map.matrix.rows(); ++i) {
                for (std::size_t j = 0; j < choi_map.matrix.cols(); ++j) {
                    const cplx v = choi_map.matrix.at(i, j);
                    out << i << ',' << j << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << "\n";
                }
            }
            out << "s_op," << fmt(s_op) << "\n";
            out << "s2_op," << fmt(s2_op) << "\n";
            out << "kraus_choi_agreement," << (agree ? "true" : "false") << "\n";
        }
        return agree ? kOk : kVerificationFailed;
    } catch (const ExitCode& code) {
        return code;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}

namespace {

void sweep_sop(const SweepOpts& o, std::ostream& out) {
    out << "# columns: epsilon,s_op,s2_op\n";
    for (int i = 0; i < o.eps_steps; ++i) {
        const double eps =
            o.eps_min + (o.eps_max - o.eps_min) * i / std::max(1, o.eps_steps - 1);
        const auto gate = gate_fig1d(eps, 0, 0);
        auto sv = singular_values(gate.matrix);
        const double fn = gate.matrix.frobenius_norm();
        for (double& s : sv) s /= fn;
        out << fmt(eps) << ',' << fmt(vn_entropy(sv)) << ',' << fmt(renyi2_entropy(sv))
            << "\n";
    }
}

void sweep_ite(const SweepOpts& o, std::ostream& out) {
    out << "# columns: n,tau,p0,p0_closed\n";
    const double a = GateParams::from_epsilon(o.epsilon).a;
    for (int n = 0; n <= o.steps; ++n) {
        const auto res = ite_chain(o.epsilon, n, IteMode::Matrices);
        const double a2n = std::pow(a, 2.0 * n);
        out << n << ',' << fmt(res.tau) << ',' << fmt(res.p0) << ','
            << fmt(a2n / (1.0 + a2n)) << "\n";
    }
}

void sweep_feedback(const SweepOpts& o, std::ostream& out) {
    out << "# columns: epsilon,a,n,p_attempt,p_success,p_max"
        << (o.shots > 0 ? ",p_success_mc" : "") << "\n";
    const BlochState psi{o.beta, 0.0};
    for (int i = 0; i < o.eps_steps; ++i) {
        const double eps =
            o.eps_min + (o.eps_max - o.eps_min) * i / std::max(1, o.eps_steps - 1);
        const double a = GateParams::from_epsilon(eps).a;
        if (std::abs(a - 1.0) < 1e-6) continue;  // unitary point: nothing to correct
        TrajectoryStats stats;
        if (o.shots > 0) {
            stats = simulate_feedback(a, psi.to_state(), o.steps, o.shots,
                                      mix_seed(o.seed, static_cast<std::uint64_t>(i)));
        }
        const double pm = p_max(m_povm_from_a(a, 0), psi.to_state());
        for (int n = 1; n <= o.steps; ++n) {
            out << fmt(eps) << ',' << fmt(a) << ',' << n << ',' << fmt(p_attempt(a, psi, n))
                << ',' << fmt(p_success(a, psi, n)) << ',' << fmt(pm);
            if (o.shots > 0) out << ',' << fmt(stats.empirical_p_success[n - 1]);
            out << "\n";
        }
    }
}

void sweep_estimator(const SweepOpts& o, std::ostream& out) {
    out << "# columns: epsilon,method,mean,std_error,repeats,M,K,seed\n";
    for (int i = 0; i < o.eps_steps; ++i) {
        const double eps =
            o.eps_min + (o.eps_max - o.eps_min) * i / std::max(1, o.eps_steps - 1);
        const LinearMap map = m_povm(GateParams::from_epsilon(eps).theta, 0);
        ShadowConfig cfg;
        cfg.n_unitaries = o.unitaries;
        cfg.shots_per_unitary = o.shots_per_unitary;
        cfg.seed = mix_seed(o.seed, static_cast<std::uint64_t>(i));

        auto row = [&](const std::string& method, double mean, double stderr_, int repeats,
                       int m_count, long k_count) {
            out << fmt(eps) << ',' << method << ',' << fmt(mean) << ',' << fmt(stderr_) << ','
                << repeats << ',' << m_count << ',' << k_count << ',' << o.seed << "\n";
        };
        row("exact", exact_renyi2_op(map), 0.0, 1, 0, 0);
        const auto swap = swap_test_renyi2(map, o.swap_shots, mix_seed(cfg.seed, 1));
        row(swap.method, swap.value, swap.std_error, swap.repeats, 0, o.swap_shots);
        const auto ham = hamming_renyi2(map, cfg, o.repeats);
        row(ham.method, ham.value, ham.std_error, ham.repeats, o.unitaries,
            o.shots_per_unitary);
        const auto shad = shadow_renyi2_repeated(map, cfg, o.repeats);
        row(shad.method, shad.value, shad.std_error, shad.repeats, o.unitaries,
            o.shots_per_unitary);
    }
}

}  // namespace

int cmd_sweep(const SweepOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.eps_steps < 1 || opts.steps < 0 || opts.eps_max < opts.eps_min) {
            err << "error: invalid sweep grid\n";
            return kUsageError;
        }
        json params = {{"kind", opts.kind},       {"eps_min", opts.eps_min},
                       {"eps_max", opts.eps_max}, {"eps_steps", opts.eps_steps},
                       {"epsilon", opts.epsilon}, {"steps", opts.steps},
                       {"beta", opts.beta},       {"shots", opts.shots},
                       {"unitaries", opts.unitaries}, {"shots_per_unitary", opts.shots_per_unitary},
                       {"repeats", opts.repeats}};
        out << manifest_line("sweep-" + opts.kind, params, opts.seed) << "\n";
        if (opts.kind == "sop") sweep_sop(opts, out);
        else if (opts.kind == "ite") sweep_ite(opts, out);
        else if (opts.kind == "feedback") sweep_feedback(opts, out);
        else if (opts.kind == "estimator") sweep_estimator(opts, out);
        else {
            err << "error: unknown sweep kind '" << opts.kind << "'\n";
            return kUsageError;
        }
        return kOk;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}

int cmd_zx_check(const ZxCheckOpts& opts, std::ostream& out, std::ostream& err) {
    using mbqc::zx::ZxDiagram;
    try {
        ComplexMatrix lhs, rhs;
        std::string label;
        if (!opts.builtin.empty()) {
            if (opts.builtin == "teleport") {
                const auto bits = parse_bits(opts.postselect);
                if (bits.size() != 2) throw ExitCode(kUsageError);
                const auto d = mbqc::zx::teleport_diagram(bits[0], bits[1]);
                lhs = mbqc::zx::to_matrix(mbqc::zx::simplify(d), 40);
                rhs = byproduct(bits[0], bits[1]).matrix;
                label = "teleport vs byproduct";
            } else if (opts.builtin == "fig7") {
                const auto d = mbqc::zx::fig7_diagram(opts.epsilon);
                lhs = mbqc::zx::to_matrix(d, 40);
                rhs = gate_fig1e(opts.epsilon, 0).matrix;
                label = "fig7 vs two-qubit gate";
            } else if (opts.builtin == "bubble") {
                const auto d = mbqc::zx::nonunitary_bubble(opts.epsilon);
                lhs = mbqc::zx::to_matrix(d, 40);
                rhs = ComplexMatrix::identity(2) -
                      pauli_x() * cplx{std::tan(opts.epsilon / 2.0), 0.0};
                label = "bubble vs I - tan(eps/2) X";
            } else {
                err << "error: unknown builtin '" << opts.builtin
                    << "' (teleport|fig7|bubble)\n";
                return kUsageError;
            }
        } else if (opts.files.size() == 2) {
            try {
                lhs = mbqc::zx::to_matrix(load_zx_file(opts.files[0], opts.overrides), 40);
                rhs = mbqc::zx::to_matrix(load_zx_file(opts.files[1], opts.overrides), 40);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return kUsageError;
            }
            label = opts.files[0] + " vs " + opts.files[1];
        } else {
            err << "error: zx check needs two diagram files or --builtin\n";
            return kUsageError;
        }

        if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
            out << "verdict: not equivalent (boundary signature mismatch)\n";
            return kVerificationFailed;
        }
        const bool equivalent = equal_up_to_scalar(lhs, rhs, 1e-10);
        out << "check: " << label << "\n";
        if (equivalent) {
            const cplx ratio = frobenius_inner(rhs, lhs) / frobenius_inner(rhs, rhs).real();
            out << "verdict: equivalent up to scalar\n";
            out << "scalar: " << fmt(ratio.real()) << (ratio.imag() < 0 ? "-" : "+")
                << fmt(std::abs(ratio.imag())) << "i\n";
            return kOk;
        }
        out << "verdict: not equivalent\n";
        return kVerificationFailed;
    } catch (const ExitCode& code) {
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}

}  // namespace mbqc::cli
