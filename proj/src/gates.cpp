#include "mbqc/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "mbqc/linalg.hpp"

namespace mbqc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kHalfPi = 1.5707963267948966;
const cplx kI{0.0, 1.0};
}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m{{0.0, -kI}, {kI, 0.0}};
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

const ComplexMatrix& hadamard() {
    static const ComplexMatrix m = ComplexMatrix{{1.0, 1.0}, {1.0, -1.0}} *
                                   cplx{0.7071067811865475244, 0.0};
    return m;
}

const ComplexMatrix& cz_gate() {
    static const ComplexMatrix m = ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0});
    return m;
}

const ComplexMatrix& swap_gate() {
    static const ComplexMatrix m{{1.0, 0.0, 0.0, 0.0},
                                 {0.0, 0.0, 1.0, 0.0},
                                 {0.0, 1.0, 0.0, 0.0},
                                 {0.0, 0.0, 0.0, 1.0}};
    return m;
}

const ComplexMatrix& cnot_gate() {
    static const ComplexMatrix m{{1.0, 0.0, 0.0, 0.0},
                                 {0.0, 1.0, 0.0, 0.0},
                                 {0.0, 0.0, 0.0, 1.0},
                                 {0.0, 0.0, 1.0, 0.0}};
    return m;
}

GateParams GateParams::from_epsilon(double eps) {
    GateParams p;
    p.epsilon = eps;
    p.theta = kHalfPi - eps;
    p.a = std::tan(0.5 * (kHalfPi + eps));  // cot(theta/2)
    return p;
}

GateParams GateParams::from_theta(double theta) {
    return from_epsilon(kHalfPi - theta);
}

GateParams GateParams::from_a(double a) {
    if (a == 0.0 || !std::isfinite(a)) {
        throw std::invalid_argument("GateParams: a must be finite and nonzero");
    }
    double theta = 2.0 * std::atan(1.0 / a);
    if (theta < 0.0) theta += 2.0 * kPi;  // negative a lands in (pi, 2pi)
    GateParams p;
    p.theta = theta;
    p.epsilon = kHalfPi - theta;
    p.a = a;
    return p;
}

StateVector BlochState::to_state() const {
    return StateVector::from_amplitudes(
        1, {cplx{std::cos(beta / 2.0), 0.0},
            std::polar(1.0, varphi) * std::sin(beta / 2.0)});
}

LinearMap m_povm(double theta, int s) {
    const double c = std::cos(theta / 2.0);
    const double sn = std::sin(theta / 2.0);
    if (s == 0) return LinearMap(ComplexMatrix::diagonal({c, sn}), 1, 1);
    return LinearMap(ComplexMatrix::diagonal({sn, -c}), 1, 1);
}

LinearMap m_povm_from_a(double a, int s) {
    const double norm = std::sqrt(1.0 + a * a);
    if (s == 0) return LinearMap(ComplexMatrix::diagonal({a / norm, 1.0 / norm}), 1, 1);
    return LinearMap(ComplexMatrix::diagonal({1.0 / norm, -a / norm}), 1, 1);
}

LinearMap gate_fig1c(double epsilon, int s1, int s2) {
    const auto p = GateParams::from_epsilon(epsilon);
    ComplexMatrix zs = (s1 & 1) ? pauli_z() : ComplexMatrix::identity(2);
    ComplexMatrix m = hadamard() * m_povm(p.theta, s2).matrix * hadamard() * zs;
    return LinearMap(m * cplx{0.7071067811865475244, 0.0}, 1, 1);
}

LinearMap gate_fig1d(double epsilon, int s1, int s2) {
    const auto p = GateParams::from_epsilon(epsilon);
    ComplexMatrix xs = (s2 & 1) ? pauli_x() : ComplexMatrix::identity(2);
    ComplexMatrix m = xs * m_povm(p.theta, s1).matrix;
    return LinearMap(m * cplx{0.7071067811865475244, 0.0}, 1, 1);
}

LinearMap gate_fig1e(double epsilon, int s) {
    const double e = epsilon + (s & 1) * kPi;
    const ComplexMatrix xx = tensor_product(pauli_x(), pauli_x());
    ComplexMatrix m =
        (ComplexMatrix::identity(4) * cplx{std::cos(e / 2.0), 0.0} -
         xx * cplx{std::sin(e / 2.0), 0.0}) *
        swap_gate();
    const double fn = m.frobenius_norm();
    return LinearMap(m * cplx{1.0 / fn, 0.0}, 2, 2);
}

LinearMap unitary_xx(double phi) {
    const ComplexMatrix xx = tensor_product(pauli_x(), pauli_x());
    ComplexMatrix m = (ComplexMatrix::identity(4) * cplx{std::cos(phi / 2.0), 0.0} -
                       xx * (kI * std::sin(phi / 2.0))) *
                      swap_gate();
    return LinearMap(std::move(m), 2, 2);
}

LinearMap byproduct(int s1, int s2) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    if (s2 & 1) m = pauli_x() * m;
    if (s1 & 1) m = m * pauli_z();
    return LinearMap(std::move(m), 1, 1);
}

std::pair<LinearMap, LinearMap> povm_pair_for_target(const LinearMap& n, cplx c) {
    if (std::abs(c) > 1.0 + 1e-12) {
        throw std::invalid_argument("povm_pair_for_target: |c| must be <= 1");
    }
    if (n.matrix.rows() != n.matrix.cols()) {
        throw std::invalid_argument("povm_pair_for_target: map must be square");
    }
    const auto sv = singular_values(n.matrix);
    if (sv.empty() || sv.front() == 0.0) {
        throw std::invalid_argument("povm_pair_for_target: zero map");
    }
    ComplexMatrix m0 = n.matrix * (c / sv.front());
    ComplexMatrix m1 =
        matrix_sqrt_psd(ComplexMatrix::identity(m0.rows()) - m0.adjoint() * m0);
    return {LinearMap(std::move(m0), n.in_qubits, n.out_qubits),
            LinearMap(std::move(m1), n.in_qubits, n.out_qubits)};
}

double p_max(const LinearMap& n, const StateVector& psi) {
    const ComplexMatrix ndn = n.matrix.adjoint() * n.matrix;
    const double top = max_eigenvalue_psd(ndn);
    if (top == 0.0) {
        throw std::invalid_argument("p_max: zero map");
    }
    StateVector applied = n.apply(psi);
    double num = 0.0;
    for (const auto& a : applied.amplitudes()) num += std::norm(a);
    return num / top;
}

LinearMap renormalize(const LinearMap& map, NormConvention convention) {
    switch (convention) {
        case NormConvention::UnitFrobenius: {
            const double fn = map.matrix.frobenius_norm();
            if (fn == 0.0) throw std::invalid_argument("renormalize: zero map");
            return LinearMap(map.matrix * cplx{1.0 / fn, 0.0}, map.in_qubits, map.out_qubits);
        }
        case NormConvention::UnitMaxEig: {
            const auto sv = singular_values(map.matrix);
            if (sv.empty() || sv.front() == 0.0) {
                throw std::invalid_argument("renormalize: zero map");
            }
            return LinearMap(map.matrix * cplx{1.0 / sv.front(), 0.0}, map.in_qubits,
                             map.out_qubits);
        }
        case NormConvention::Povm:
            throw std::invalid_argument(
                "renormalize: POVM normalization is defined by a gate's outcome family; "
                "use the gate constructors");
    }
    throw std::logic_error("renormalize: unknown convention");
}

}  // namespace mbqc
