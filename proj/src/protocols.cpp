#include "mbqc/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "mbqc/engine.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/rng.hpp"

namespace mbqc {

namespace {

void check_schedule_param(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("feedback: a must be positive and finite");
    }
    if (std::abs(a - 1.0) < 1e-6) {
        throw std::invalid_argument("feedback: a = 1 is the unitary point, schedule undefined");
    }
}

double p_max_closed(double a, const BlochState& psi) {
    const double c2 = std::cos(psi.beta / 2.0) * std::cos(psi.beta / 2.0);
    return c2 + (1.0 - c2) / (a * a);
}

}  // namespace

FeedbackSchedule feedback_schedule(double a, int n) {
    check_schedule_param(a);
    if (n < 1) throw std::invalid_argument("feedback_schedule: n must be >= 1");
    FeedbackSchedule s;
    s.base_a = a;
    double cur = a;
    for (int k = 0; k < n; ++k) {
        if (!std::isfinite(cur)) {
            throw std::invalid_argument("feedback_schedule: schedule overflows for this n");
        }
        s.terms.push_back(cur);
        cur = -cur * cur;
    }
    return s;
}

double p_attempt(double a, const BlochState& psi, int n) {
    check_schedule_param(a);
    if (n < 1) throw std::invalid_argument("p_attempt: n must be >= 1");
    const double pm = p_max_closed(a, psi);
    const double span = std::pow(a, std::ldexp(1.0, n)) - std::pow(a, -std::ldexp(1.0, n));
    return pm * (a * a - 1.0) / span;
}

double p_success(double a, const BlochState& psi, int n) {
    check_schedule_param(a);
    if (n < 0) throw std::invalid_argument("p_success: n must be >= 0");
    double total = 0.0;
    for (int k = 1; k <= n; ++k) total += p_attempt(a, psi, k);
    return total;
}

TrajectoryStats simulate_feedback(double a, const StateVector& psi, int n_max,
                                  long trajectories, std::uint64_t seed) {
    check_schedule_param(a);
    if (psi.n_qubits() != 1) {
        throw std::invalid_argument("simulate_feedback: single-qubit input expected");
    }
    const FeedbackSchedule schedule = feedback_schedule(a, n_max);

    StateVector target = m_povm_from_a(a, 0).apply(psi);
    target.renormalize();

    TrajectoryStats stats;
    stats.success_at_attempt.assign(n_max, 0);
    stats.total = trajectories;
    stats.seed = seed;

    for (long t = 0; t < trajectories; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        StateVector state = psi;
        bool resolved = false;
        for (int k = 0; k < n_max; ++k) {
            const double ak = schedule.terms[k];
            StateVector branch0 = m_povm_from_a(ak, 0).apply(state);
            double w0 = 0.0;
            for (const auto& amp : branch0.amplitudes()) w0 += std::norm(amp);
            if (rng.uniform01() < w0) {
                branch0.renormalize();
                const double f = fidelity(branch0, target);
                stats.min_success_fidelity = std::min(stats.min_success_fidelity, f);
                ++stats.success_at_attempt[k];
                resolved = true;
                break;
            }
            StateVector branch1 = m_povm_from_a(ak, 1).apply(state);
            branch1.renormalize();
            state = std::move(branch1);
        }
        if (!resolved) ++stats.unresolved;
    }

    long cum = 0;
    for (int k = 0; k < n_max; ++k) {
        cum += stats.success_at_attempt[k];
        stats.empirical_p_success.push_back(static_cast<double>(cum) /
                                            static_cast<double>(trajectories));
    }
    return stats;
}

namespace {

// One teleport hop through a fresh |+> neighbor, measuring the carrier at
// the given basis; equals H M_s on the logical qubit.
StateVector hop(const StateVector& logical, const MeasurementBasis& basis, int outcome) {
    MeasurementPattern two_node({NodeRole::Input, NodeRole::Output}, {{0, 1}},
                                {{0, basis}});
    auto rec = run_pattern(two_node, logical, OutcomePolicy::postselect({outcome}));
    return rec.output_state;
}

double prob_zero(const StateVector& s) { return std::norm(s.amp(0)); }

}  // namespace

IteResult ite_chain(double epsilon, int n, IteMode mode, XOutcomePolicy policy,
                    std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("ite_chain: n must be >= 0");
    const GateParams params = GateParams::from_epsilon(epsilon);
    IteResult result;
    result.tau = 0.5 * n * std::log(params.a);

    if (mode == IteMode::Matrices) {
        StateVector state = StateVector::plus_states(1);
        const ComplexMatrix step = m_povm(params.theta, 0).matrix;  // N_eps up to scale
        for (int k = 0; k < n; ++k) {
            state = apply_gate(state, step, {0});
        }
        state.renormalize();
        result.p0 = prob_zero(state);
        return result;
    }

    // MBQC route. A single chain pattern covers small n; longer chains are
    // built from 3-node segments reusing each output as the next input, which
    // also hosts the sampled-X feed-forward variant.
    if (policy == XOutcomePolicy::PostselectZero && 2 * n + 1 <= kDefaultQubitCap) {
        if (n == 0) {
            result.p0 = 0.5;
            return result;
        }
        auto pattern = ite_chain_pattern(epsilon, n);
        std::vector<int> zeros(2 * n, 0);
        auto rec = run_pattern(pattern, StateVector::plus_states(1),
                               OutcomePolicy::postselect(zeros));
        result.p0 = prob_zero(rec.output_state);
        return result;
    }

    Rng rng(seed);
    StateVector state = StateVector::plus_states(1);
    for (int k = 0; k < n; ++k) {
        state = hop(state, MeasurementBasis::xz_tilt(epsilon), 0);
        const int s2 = policy == XOutcomePolicy::PostselectZero ? 0 : rng.bit(0.5);
        state = hop(state, MeasurementBasis::x(), s2);
        if (policy == XOutcomePolicy::CorrectSampled && s2 == 1) {
            state = apply_gate(state, pauli_x(), {0});
        }
    }
    result.p0 = prob_zero(state);
    return result;
}

bool compact_chain_equivalence(double epsilon, int n) {
    if (n < 1 || n > 16) {
        throw std::invalid_argument("compact_chain_equivalence: n out of range");
    }

    // Compacted route: each step is a single tilted hop (H M_0) followed by
    // an explicit Hadamard gate, so the step acts as M_0 alone.
    StateVector compact = StateVector::plus_states(1);
    for (int k = 0; k < n; ++k) {
        compact = hop(compact, MeasurementBasis::xz_tilt(epsilon), 0);
        compact = apply_gate(compact, hadamard(), {0});
    }
    const double p0_compact = prob_zero(compact);

    // Full chain over every X-outcome string, with the byproduct undone by a
    // conditional X right after each segment.
    const int strings = n <= 10 ? (1 << n) : 1024;
    for (int mask = 0; mask < strings; ++mask) {
        StateVector state = StateVector::plus_states(1);
        for (int k = 0; k < n; ++k) {
            state = hop(state, MeasurementBasis::xz_tilt(epsilon), 0);
            const int s2 = (mask >> k) & 1;
            state = hop(state, MeasurementBasis::x(), s2);
            if (s2 == 1) state = apply_gate(state, pauli_x(), {0});
        }
        if (std::abs(prob_zero(state) - p0_compact) > 1e-10) return false;
        if (std::abs((1.0 - prob_zero(state)) - (1.0 - p0_compact)) > 1e-10) return false;
    }
    return true;
}

}  // namespace mbqc
