#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbqc/complex_matrix.hpp"

namespace mbqc {

/// Default register ceiling for dense simulation. Callers that build states
/// take it as a parameter, so it is a soft default, not a global.
inline constexpr int kDefaultQubitCap = 16;

/// Normalized complex amplitude vector over n qubits.
///
/// Qubit ordering convention (shared by the whole project): qubit k is bit k
/// of the basis-state index, i.e. the least-significant bit is qubit 0.
/// Unnormalized vectors are only allowed when explicitly flagged; they occur
/// inside Kraus extraction where projections are applied without rescaling.
class StateVector {
public:
    explicit StateVector(int n_qubits);  // |0...0>

    static StateVector basis_state(int n_qubits, std::uint64_t index);
    static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amps);
    static StateVector unnormalized(int n_qubits, std::vector<cplx> amps);
    /// |+>^n
    static StateVector plus_states(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    bool normalized_flag() const { return normalized_; }

    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }
    cplx amp(std::uint64_t i) const { return amps_[i]; }

    double norm() const;
    void renormalize();

private:
    StateVector(int n, std::vector<cplx> amps, bool normalized);

    int n_qubits_ = 0;
    std::vector<cplx> amps_;
    bool normalized_ = true;
};

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);

/// |<a|b>| for normalized inputs.
double fidelity(const StateVector& a, const StateVector& b);

/// Combined register with `low` on qubits [0, low.n) and `high` above.
StateVector tensor_states(const StateVector& low, const StateVector& high);

/// Applies a 2^k x 2^k gate to the listed target qubits; gate bit m addresses
/// targets[m]. Other qubits are untouched. Norm is preserved iff the gate is
/// unitary.
StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate,
                       std::span<const int> targets);

inline StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate,
                              std::initializer_list<int> targets) {
    return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

}  // namespace mbqc
