#include "mbqc/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace mbqc {

namespace {
constexpr double kNormTol = 1e-12;
}

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::uint64_t{1} << n_qubits, cplx{0.0, 0.0}) {
    if (n_qubits < 0 || n_qubits > 30) {
        throw std::invalid_argument("StateVector: qubit count out of range");
    }
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<cplx> amps, bool normalized)
    : n_qubits_(n), amps_(std::move(amps)), normalized_(normalized) {}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw std::invalid_argument("StateVector: basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cplx> amps) {
    if (n_qubits < 0 || amps.size() != (std::uint64_t{1} << n_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count is not 2^n");
    }
    StateVector s(n_qubits, std::move(amps), true);
    for (const auto& a : s.amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("StateVector: non-finite amplitude");
        }
    }
    if (std::abs(s.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: amplitudes not normalized");
    }
    return s;
}

StateVector StateVector::unnormalized(int n_qubits, std::vector<cplx> amps) {
    if (n_qubits < 0 || amps.size() != (std::uint64_t{1} << n_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count is not 2^n");
    }
    return StateVector(n_qubits, std::move(amps), false);
}

StateVector StateVector::plus_states(int n_qubits) {
    StateVector s(n_qubits);
    const double a = std::pow(0.5, 0.5 * n_qubits);
    for (auto& v : s.amps_) v = a;
    return s;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::renormalize() {
    const double n = norm();
    if (n == 0.0) {
        throw std::runtime_error("StateVector: cannot normalize zero vector");
    }
    for (auto& a : amps_) a /= n;
    normalized_ = true;
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner: qubit count mismatch");
    }
    cplx s = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp(i)) * b.amp(i);
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::abs(inner(a, b));
}

StateVector tensor_states(const StateVector& low, const StateVector& high) {
    std::vector<cplx> amps(low.dim() * high.dim());
    for (std::uint64_t h = 0; h < high.dim(); ++h) {
        for (std::uint64_t l = 0; l < low.dim(); ++l) {
            amps[(h << low.n_qubits()) | l] = high.amp(h) * low.amp(l);
        }
    }
    const int n = low.n_qubits() + high.n_qubits();
    if (low.normalized_flag() && high.normalized_flag()) {
        return StateVector::from_amplitudes(n, std::move(amps));
    }
    return StateVector::unnormalized(n, std::move(amps));
}

StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate,
                       std::span<const int> targets) {
    const int k = static_cast<int>(targets.size());
    const std::uint64_t gdim = std::uint64_t{1} << k;
    if (gate.rows() != gdim || gate.cols() != gdim) {
        throw std::invalid_argument("apply_gate: gate dimension does not match target count");
    }
    std::uint64_t target_mask = 0;
    for (int t : targets) {
        if (t < 0 || t >= state.n_qubits()) {
            throw std::invalid_argument("apply_gate: target out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << t;
        if (target_mask & bit) {
            throw std::invalid_argument("apply_gate: duplicate target");
        }
        target_mask |= bit;
    }

    std::vector<cplx> out(state.dim(), cplx{0.0, 0.0});
    std::vector<std::uint64_t> spread(gdim, 0);
    for (std::uint64_t j = 0; j < gdim; ++j) {
        std::uint64_t idx = 0;
        for (int m = 0; m < k; ++m) {
            if (j & (std::uint64_t{1} << m)) idx |= std::uint64_t{1} << targets[m];
        }
        spread[j] = idx;
    }

    std::vector<cplx> sub(gdim);
    for (std::uint64_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) continue;  // enumerate target-bits-clear indices
        for (std::uint64_t j = 0; j < gdim; ++j) sub[j] = state.amp(base | spread[j]);
        for (std::uint64_t r = 0; r < gdim; ++r) {
            cplx acc = 0.0;
            for (std::uint64_t c = 0; c < gdim; ++c) acc += gate.at(r, c) * sub[c];
            out[base | spread[r]] = acc;
        }
    }
    double n2 = 0.0;
    for (const auto& a : out) n2 += std::norm(a);
    if (state.normalized_flag() && std::abs(std::sqrt(n2) - 1.0) <= kNormTol) {
        return StateVector::from_amplitudes(state.n_qubits(), std::move(out));
    }
    return StateVector::unnormalized(state.n_qubits(), std::move(out));
}

}  // namespace mbqc
