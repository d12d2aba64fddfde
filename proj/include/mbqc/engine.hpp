#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "mbqc/linalg.hpp"
#include "mbqc/linear_map.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/rng.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// How measurement outcomes are chosen during a pattern run: sampled from
/// the Born distribution with a fixed seed, or postselected to a given bit
/// string aligned with the measurement order.
struct OutcomePolicy {
    enum class Mode { Sample, Postselect };
    Mode mode = Mode::Sample;
    std::uint64_t seed = 0;
    std::vector<int> bits;

    static OutcomePolicy sample(std::uint64_t seed) {
        return {Mode::Sample, seed, {}};
    }
    static OutcomePolicy postselect(std::vector<int> bits) {
        return {Mode::Postselect, 0, std::move(bits)};
    }
};

/// One sampled/postselected measurement history.
struct RunRecord {
    std::vector<int> outcomes;
    double joint_probability = 1.0;
    StateVector output_state{0};
};

/// Postselected branches with Born probability below this are treated as
/// impossible rather than renormalized from roundoff noise.
inline constexpr double kZeroProbability = 1e-14;

/// |+>^n followed by CZ on every edge.
StateVector build_cluster_state(int nodes, const std::vector<std::pair<int, int>>& edges,
                                int qubit_cap = kDefaultQubitCap);

/// Input amplitudes placed on the input nodes (ascending id <-> input qubit
/// index), |+> elsewhere, then CZ on every edge.
StateVector inject_input(const StateVector& input_state, const MeasurementPattern& pattern,
                         int qubit_cap = kDefaultQubitCap);

/// Measures one qubit in the given basis. Returns the outcome bit, its Born
/// probability and the renormalized collapsed state with the measured qubit
/// removed from the register (dimension halves).
std::tuple<int, double, StateVector> measure_qubit(const StateVector& state, int qubit,
                                                   const MeasurementBasis& basis,
                                                   const OutcomePolicy& policy);

/// Variant for callers that manage their own RNG stream (sampling mode) or
/// outcome choice (forced >= 0).
std::tuple<int, double, StateVector> measure_qubit(const StateVector& state, int qubit,
                                                   const MeasurementBasis& basis, Rng* rng,
                                                   int forced_outcome);

/// Injects the input, measures every non-output node in the declared order
/// and returns the history plus the state on the output nodes (ascending id
/// <-> output qubit index).
RunRecord run_pattern(const MeasurementPattern& pattern, const StateVector& input_state,
                      const OutcomePolicy& policy, int qubit_cap = kDefaultQubitCap);

/// The 2^{n_O} x 2^{n_I} Kraus operator K_s of a pattern with fixed
/// outcomes, built by propagating every computational-basis input through
/// unnormalized projections. Satisfies
///   run_pattern output = K_s|psi> / ||K_s|psi>||,
///   joint probability  = <psi|K_s^dag K_s|psi>.
LinearMap extract_kraus(const MeasurementPattern& pattern, const std::vector<int>& outcomes,
                        int qubit_cap = kDefaultQubitCap);

/// Independent route to the same operator: runs the pattern on half of a
/// maximally entangled reference pair and reshapes the surviving amplitudes.
/// The map is normalized to unit Frobenius norm (sum mu^2 = 1) and returned
/// with its Schmidt data.
std::pair<LinearMap, SchmidtData> operator_from_choi(const MeasurementPattern& pattern,
                                                     const std::vector<int>& outcomes,
                                                     int qubit_cap = kDefaultQubitCap);

}  // namespace mbqc
