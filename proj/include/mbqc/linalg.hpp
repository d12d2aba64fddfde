#pragma once

#include <vector>

#include "mbqc/complex_matrix.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// Schmidt decomposition of a bipartite pure state: coefficients are the
/// singular values (non-increasing, values below the cutoff dropped) and the
/// bases are the matched orthonormal left/right vectors.
struct SchmidtData {
    std::vector<double> coefficients;
    std::vector<StateVector> left_basis;
    std::vector<StateVector> right_basis;
};

/// SVD-based Schmidt decomposition across the bipartition given by
/// `left_qubits` (must be a proper nonempty subset of the register).
/// Row/column index bits follow ascending qubit order within each side.
SchmidtData schmidt(const StateVector& state, const std::vector<int>& left_qubits,
                    double cutoff = 1e-12);

/// Singular values of a matrix, non-increasing, nothing dropped.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Von Neumann entropy -sum mu^2 ln mu^2 in nats, with 0 ln 0 := 0.
/// Input is the coefficient list (not squared); requires sum mu^2 = 1
/// within 1e-8.
double vn_entropy(const std::vector<double>& coefficients);

/// Second Renyi entropy -ln sum mu^4 in nats, same input contract.
double renyi2_entropy(const std::vector<double>& coefficients);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-8, 0) are clamped to zero; below that it throws.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double max_eigenvalue_psd(const ComplexMatrix& m);

}  // namespace mbqc
