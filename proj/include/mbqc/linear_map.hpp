#pragma once

#include "mbqc/complex_matrix.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// A dense linear map between qubit registers: 2^out_qubits x 2^in_qubits.
/// Houses gates, Kraus operators and induced channel operators.
struct LinearMap {
    ComplexMatrix matrix;
    int in_qubits = 0;
    int out_qubits = 0;

    LinearMap() = default;
    LinearMap(ComplexMatrix m, int n_in, int n_out);

    /// K|psi>, returned unnormalized (norm^2 is the branch probability when
    /// the map comes from a measurement family).
    StateVector apply(const StateVector& psi) const;
};

LinearMap operator*(const LinearMap& a, const LinearMap& b);

}  // namespace mbqc
