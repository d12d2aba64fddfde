#pragma once

#include <utility>

#include "mbqc/linear_map.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

// Fixed single/two-qubit matrices. Two-qubit matrices follow the register
// convention: gate bit 0 is the low-order qubit.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& hadamard();
const ComplexMatrix& cz_gate();
const ComplexMatrix& swap_gate();
/// CX with control = gate bit 1, target = gate bit 0.
const ComplexMatrix& cnot_gate();

/// Tilt parametrization shared by the single-qubit nonunitary gates:
/// eps is the xz tilt away from the x axis, theta = pi/2 - eps the polar
/// angle, and a = cot(theta/2) = cos(eps)/(1 - sin(eps)) the gate parameter.
struct GateParams {
    double epsilon = 0.0;
    double theta = 1.5707963267948966;
    double a = 1.0;

    static GateParams from_epsilon(double eps);
    static GateParams from_theta(double theta);
    /// Inverts a = cot(theta/2); negative a lands in theta in (pi, 2pi).
    static GateParams from_a(double a);
};

enum class NormConvention { Povm, UnitFrobenius, UnitMaxEig };

/// Point on the Bloch sphere: cos(beta/2)|0> + e^{i varphi} sin(beta/2)|1>.
struct BlochState {
    double beta = 0.0;
    double varphi = 0.0;
    StateVector to_state() const;
};

/// POVM pair of the tilted measurement, in the trigonometric form
///   M_0 = diag(cos(theta/2), sin(theta/2)),
///   M_1 = diag(sin(theta/2), -cos(theta/2)),
/// which equals diag(a,1)/sqrt(1+a^2) (resp. diag(1,-a)/sqrt(1+a^2)) with
/// a = cot(theta/2) and stays finite at theta = 0.
LinearMap m_povm(double theta, int s);

/// Same pair expressed directly through the a parameter; supports any
/// nonzero real a (negative a arises in the feedback schedule).
LinearMap m_povm_from_a(double a, int s);

/// (1/sqrt(2)) H M_{s2} H Z^{s1} with the tilt on the second measured node.
LinearMap gate_fig1c(double epsilon, int s1, int s2);

/// (1/sqrt(2)) X^{s2} M_{s1} with the tilt on the first measured node.
LinearMap gate_fig1d(double epsilon, int s1, int s2);

/// Two-qubit nonunitary gate (cos(e'/2) I - sin(e'/2) X(x)X) SWAP with
/// e' = eps + s*pi, normalized to unit Frobenius norm.
LinearMap gate_fig1e(double epsilon, int s);

/// exp(-i (phi/2) X(x)X) composed with SWAP.
LinearMap unitary_xx(double phi);

/// Pauli byproduct X^{s2} Z^{s1}.
LinearMap byproduct(int s1, int s2);

/// POVM pair targeting an arbitrary map: m0 = c * n / sigma_max(n),
/// m1 = sqrt(I - m0^dag m0). Requires |c| <= 1 and square nonzero n.
std::pair<LinearMap, LinearMap> povm_pair_for_target(const LinearMap& n, cplx c);

/// Maximal success probability <psi|N^dag N|psi> / max eig(N^dag N).
double p_max(const LinearMap& n, const StateVector& psi);

/// Rescales by a positive real so the convention holds. The POVM convention
/// is tied to a gate's outcome family and is not available here.
LinearMap renormalize(const LinearMap& map, NormConvention convention);

}  // namespace mbqc
