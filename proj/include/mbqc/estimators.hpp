#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/linear_map.hpp"
#include "mbqc/rng.hpp"

namespace mbqc {

/// Raised when an estimator produces a value outside its domain (e.g. a
/// non-positive purity estimate); callers should retry with more samples
/// rather than clamp.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class UnitaryEnsemble { Haar, Clifford1q };

struct ShadowConfig {
    int n_unitaries = 40;       // M
    int shots_per_unitary = 500;  // K
    UnitaryEnsemble ensemble = UnitaryEnsemble::Haar;
    std::uint64_t seed = 0;
};

struct EstimateReport {
    double value = 0.0;
    double std_error = 0.0;
    std::string method;
    int repeats = 1;
};

/// Normalized (I (x) N)|Phi+>: reference qubits high, map output low.
StateVector choi_state(const LinearMap& n);

/// -ln sum mu^4 of the Frobenius-normalized singular values; the exact
/// baseline every sampling estimator converges to.
double exact_renyi2_op(const LinearMap& n);

/// Destructive two-copy purity measurement across the output qubits of two
/// independent Choi copies; std_error from shot batching.
EstimateReport swap_test_renyi2(const LinearMap& n, long shots, std::uint64_t seed);

/// Randomized-measurement estimator: per random unitary, estimate the
/// output-qubit distribution from K shots, then combine the per-unitary
/// quadratic forms through the Hamming-weighted identity
///   purity = 2 sum_{s,s'} (-2)^{-D(s,s')} mean_m[P_m(s) P_m(s')].
/// With repeats > 1, value is the mean and std_error the sample standard
/// deviation across repeats.
EstimateReport hamming_renyi2(const LinearMap& n, const ShadowConfig& cfg, int repeats = 1);

/// Classical-shadow reconstructions rho_m = 3 U^dag [empirical] U - I, one
/// per random unitary (unit trace, not necessarily PSD).
std::vector<ComplexMatrix> shadow_states(const LinearMap& n, const ShadowConfig& cfg);

/// -ln[ (1/(M(M-1))) sum_{m != m'} Tr(rho_m rho_m') ].
EstimateReport shadow_renyi2(const std::vector<ComplexMatrix>& shadows);

/// Shadow pipeline with repeats (mean / std-dev across repeats).
EstimateReport shadow_renyi2_repeated(const LinearMap& n, const ShadowConfig& cfg, int repeats);

/// One draw from the ensemble: Haar via QR of a complex Gaussian with the
/// phase-fixed diagonal, or uniform over the 24-element single-qubit
/// Clifford group.
ComplexMatrix sample_unitary(UnitaryEnsemble ensemble, Rng& rng);

/// The canonical table of the 24 single-qubit Cliffords (global phase fixed).
const std::vector<ComplexMatrix>& clifford1q_table();

}  // namespace mbqc
