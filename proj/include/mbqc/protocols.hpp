#pragma once

#include <cstdint>
#include <vector>

#include "mbqc/gates.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// Monitor-and-correct retry angles: a_1 = a and a_{k+1} = -a_k^2, so that
/// M_0(a_{k+1}) undoes a preceding M_1(a_k) failure and every success branch
/// applies M_0(a) up to scalar. |a_k| = a^{2^{k-1}}.
struct FeedbackSchedule {
    double base_a = 0.0;
    std::vector<double> terms;
};

/// One Monte Carlo batch of feedback trajectories.
struct TrajectoryStats {
    std::vector<long> success_at_attempt;  // [k] = trajectories succeeding at attempt k+1
    long unresolved = 0;                   // still failing after n_max attempts
    long total = 0;
    std::uint64_t seed = 0;
    std::vector<double> empirical_p_success;  // cumulative, per attempt count
    double min_success_fidelity = 1.0;        // vs M0(a)|psi>, over all successes
};

/// Closed-form schedule; requires a > 0, a != 1 (within 1e-6; the unitary
/// point has no correction to schedule).
FeedbackSchedule feedback_schedule(double a, int n);

/// Success probability of exactly the n-th attempt,
/// p_n = p_max (a^2-1)/(a^{2^n} - a^{-2^n}).
double p_attempt(double a, const BlochState& psi, int n);

/// Total success probability after n attempts (partial sums of p_attempt);
/// tends to p_max as n grows.
double p_success(double a, const BlochState& psi, int n);

/// Sequentially samples the POVM pairs {M0(a_k), M1(a_k)} along the
/// schedule, stopping at the first success or after n_max attempts.
TrajectoryStats simulate_feedback(double a, const StateVector& psi, int n_max,
                                  long trajectories, std::uint64_t seed);

enum class IteMode { Matrices, Mbqc };

/// Handling of the X-basis byproduct measurements inside the chain.
enum class XOutcomePolicy { PostselectZero, CorrectSampled };

struct IteResult {
    double p0 = 0.0;  // |<0|out>|^2
    double tau = 0.0; // (n/2) ln a
};

/// n applications of the tilt gate on |+>, by direct matrix products or by
/// running the measurement chain (tilt outcomes postselected to 0; X
/// outcomes postselected or sampled-and-corrected per policy).
IteResult ite_chain(double epsilon, int n, IteMode mode,
                    XOutcomePolicy policy = XOutcomePolicy::PostselectZero,
                    std::uint64_t seed = 0);

/// Checks that the single-qubit compacted chain (hop + explicit Hadamard per
/// step, conditional X correction) reproduces the full chain's output
/// distribution for every X-outcome string, at 1e-10.
bool compact_chain_equivalence(double epsilon, int n);

}  // namespace mbqc
