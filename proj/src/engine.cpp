#include "mbqc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbqc {

namespace {

void apply_cz_edges(std::vector<cplx>& amps, const std::vector<std::pair<int, int>>& edges) {
    for (const auto& [a, b] : edges) {
        const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            if ((i & mask) == mask) amps[i] = -amps[i];
        }
    }
}

// Contracts qubit q with the bra of `eig`; returns the unnormalized
// remainder (dimension halved) and its squared norm.
std::pair<std::vector<cplx>, double> project_out(const std::vector<cplx>& amps, int n, int q,
                                                 const std::array<cplx, 2>& eig) {
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const std::uint64_t low_mask = (std::uint64_t{1} << q) - 1;
    std::vector<cplx> out(half);
    const cplx c0 = std::conj(eig[0]);
    const cplx c1 = std::conj(eig[1]);
    double w = 0.0;
    for (std::uint64_t r = 0; r < half; ++r) {
        const std::uint64_t base = (r & low_mask) | ((r & ~low_mask) << 1);
        const cplx v = c0 * amps[base] + c1 * amps[base | (std::uint64_t{1} << q)];
        out[r] = v;
        w += std::norm(v);
    }
    return {std::move(out), w};
}

struct LiveRegister {
    std::vector<int> nodes;  // node ids in register order (ascending)

    int position_of(int node) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
        if (it == nodes.end() || *it != node) {
            throw std::logic_error("engine: node not in live register");
        }
        return static_cast<int>(it - nodes.begin());
    }
    void remove(int node) { nodes.erase(nodes.begin() + position_of(node)); }
};

}  // namespace

StateVector build_cluster_state(int nodes, const std::vector<std::pair<int, int>>& edges,
                                int qubit_cap) {
    if (nodes < 1 || nodes > qubit_cap) {
        throw std::invalid_argument("build_cluster_state: node count exceeds qubit cap");
    }
    StateVector s = StateVector::plus_states(nodes);
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
            throw std::invalid_argument("build_cluster_state: invalid edge");
        }
    }
    apply_cz_edges(s.amplitudes(), edges);
    return s;
}

StateVector inject_input(const StateVector& input_state, const MeasurementPattern& pattern,
                         int qubit_cap) {
    const int n = pattern.node_count();
    const auto& inputs = pattern.input_nodes();
    if (input_state.n_qubits() != static_cast<int>(inputs.size())) {
        throw std::invalid_argument("inject_input: input state size does not match pattern");
    }
    if (n > qubit_cap) {
        throw std::invalid_argument("inject_input: pattern exceeds qubit cap");
    }

    const int n_rest = n - static_cast<int>(inputs.size());
    const double rest_amp = std::pow(0.5, 0.5 * n_rest);
    std::vector<cplx> amps(std::uint64_t{1} << n);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t in_bits = 0;
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            if (i & (std::uint64_t{1} << inputs[k])) in_bits |= std::uint64_t{1} << k;
        }
        amps[i] = input_state.amp(in_bits) * rest_amp;
    }
    apply_cz_edges(amps, pattern.edges());
    if (input_state.normalized_flag()) {
        return StateVector::from_amplitudes(n, std::move(amps));
    }
    return StateVector::unnormalized(n, std::move(amps));
}

std::tuple<int, double, StateVector> measure_qubit(const StateVector& state, int qubit,
                                                   const MeasurementBasis& basis, Rng* rng,
                                                   int forced_outcome) {
    const int n = state.n_qubits();
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("measure_qubit: qubit out of range");
    }
    int s;
    std::vector<cplx> collapsed;
    double p;
    if (forced_outcome >= 0) {
        s = forced_outcome & 1;
        auto [amps, w] = project_out(state.amplitudes(), n, qubit, basis.eigenstate(s));
        collapsed = std::move(amps);
        p = w;
        if (p < kZeroProbability) {
            throw std::runtime_error("measure_qubit: postselected branch has zero probability");
        }
    } else {
        auto [amps0, w0] = project_out(state.amplitudes(), n, qubit, basis.eigenstate(0));
        if (rng->uniform01() < w0) {
            s = 0;
            collapsed = std::move(amps0);
            p = w0;
        } else {
            auto [amps1, w1] = project_out(state.amplitudes(), n, qubit, basis.eigenstate(1));
            s = 1;
            collapsed = std::move(amps1);
            p = w1;
        }
    }
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : collapsed) a *= inv;
    return {s, p, StateVector::from_amplitudes(n - 1, std::move(collapsed))};
}

std::tuple<int, double, StateVector> measure_qubit(const StateVector& state, int qubit,
                                                   const MeasurementBasis& basis,
                                                   const OutcomePolicy& policy) {
    if (policy.mode == OutcomePolicy::Mode::Postselect) {
        if (policy.bits.size() != 1) {
            throw std::invalid_argument("measure_qubit: postselect policy needs one bit");
        }
        return measure_qubit(state, qubit, basis, nullptr, policy.bits[0]);
    }
    Rng rng(policy.seed);
    return measure_qubit(state, qubit, basis, &rng, -1);
}

RunRecord run_pattern(const MeasurementPattern& pattern, const StateVector& input_state,
                      const OutcomePolicy& policy, int qubit_cap) {
    pattern.require_outputs();
    const auto& order = pattern.measurement_order();
    if (policy.mode == OutcomePolicy::Mode::Postselect &&
        policy.bits.size() != order.size()) {
        throw std::invalid_argument("run_pattern: postselect bit count mismatch");
    }

    StateVector state = inject_input(input_state, pattern, qubit_cap);
    LiveRegister reg;
    for (int v = 0; v < pattern.node_count(); ++v) reg.nodes.push_back(v);

    Rng rng(policy.seed);
    RunRecord rec;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int node = order[k];
        const int pos = reg.position_of(node);
        const int forced =
            policy.mode == OutcomePolicy::Mode::Postselect ? policy.bits[k] : -1;
        auto [s, p, collapsed] =
            measure_qubit(state, pos, pattern.basis(node), &rng, forced);
        rec.outcomes.push_back(s);
        rec.joint_probability *= p;
        state = std::move(collapsed);
        reg.remove(node);
    }
    rec.output_state = std::move(state);
    return rec;
}

LinearMap extract_kraus(const MeasurementPattern& pattern, const std::vector<int>& outcomes,
                        int qubit_cap) {
    pattern.require_outputs();
    const auto& order = pattern.measurement_order();
    if (outcomes.size() != order.size()) {
        throw std::invalid_argument("extract_kraus: outcome count mismatch");
    }
    const int n_in = pattern.n_inputs();
    const int n_out = pattern.n_outputs();
    ComplexMatrix k_mat(std::size_t{1} << n_out, std::size_t{1} << n_in);

    for (std::uint64_t col = 0; col < (std::uint64_t{1} << n_in); ++col) {
        StateVector state = inject_input(StateVector::basis_state(n_in, col), pattern, qubit_cap);
        std::vector<cplx> amps = state.amplitudes();
        int live_qubits = pattern.node_count();
        LiveRegister reg;
        for (int v = 0; v < pattern.node_count(); ++v) reg.nodes.push_back(v);

        for (std::size_t m = 0; m < order.size(); ++m) {
            const int pos = reg.position_of(order[m]);
            auto [next, w] = project_out(amps, live_qubits,
                                         pos, pattern.basis(order[m]).eigenstate(outcomes[m]));
            (void)w;  // zero-probability branches legitimately give a zero column
            amps = std::move(next);
            --live_qubits;
            reg.remove(order[m]);
        }
        for (std::uint64_t row = 0; row < (std::uint64_t{1} << n_out); ++row) {
            k_mat.at(row, col) = amps[row];
        }
    }
    return LinearMap(std::move(k_mat), n_in, n_out);
}

std::pair<LinearMap, SchmidtData> operator_from_choi(const MeasurementPattern& pattern,
                                                     const std::vector<int>& outcomes,
                                                     int qubit_cap) {
    pattern.require_outputs();
    const auto& order = pattern.measurement_order();
    if (outcomes.size() != order.size()) {
        throw std::invalid_argument("operator_from_choi: outcome count mismatch");
    }
    const int n = pattern.node_count();
    const int n_in = pattern.n_inputs();
    const int n_out = pattern.n_outputs();
    if (n + n_in > qubit_cap) {
        throw std::invalid_argument("operator_from_choi: reference register exceeds qubit cap");
    }

    // Reference qubits ride above the pattern nodes; the joint state starts as
    // sum_r |r>_ref (x) |r on inputs, + elsewhere> / sqrt(2^{n_in}).
    const auto& inputs = pattern.input_nodes();
    const double base_amp = std::pow(0.5, 0.5 * (n_in + n - n_in));
    std::vector<cplx> amps(std::uint64_t{1} << (n + n_in), cplx{0.0, 0.0});
    for (std::uint64_t node_bits = 0; node_bits < (std::uint64_t{1} << n); ++node_bits) {
        std::uint64_t r = 0;
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            if (node_bits & (std::uint64_t{1} << inputs[k])) r |= std::uint64_t{1} << k;
        }
        amps[(r << n) | node_bits] = base_amp;
    }
    apply_cz_edges(amps, pattern.edges());

    int live_qubits = n + n_in;
    LiveRegister reg;
    for (int v = 0; v < n; ++v) reg.nodes.push_back(v);  // refs are never measured

    for (std::size_t m = 0; m < order.size(); ++m) {
        const int pos = reg.position_of(order[m]);
        auto [next, w] =
            project_out(amps, live_qubits, pos, pattern.basis(order[m]).eigenstate(outcomes[m]));
        (void)w;
        amps = std::move(next);
        --live_qubits;
        reg.remove(order[m]);
    }

    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (norm2 < kZeroProbability) {
        throw std::runtime_error("operator_from_choi: zero-probability branch");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;

    // Remaining register: output nodes (low bits, ascending), then refs.
    ComplexMatrix n_mat(std::size_t{1} << n_out, std::size_t{1} << n_in);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n_in); ++r) {
        for (std::uint64_t o = 0; o < (std::uint64_t{1} << n_out); ++o) {
            n_mat.at(o, r) = amps[(r << n_out) | o];
        }
    }

    StateVector choi = StateVector::from_amplitudes(n_out + n_in, std::move(amps));
    SchmidtData sd;
    if (n_in == 0) {
        sd.coefficients = {1.0};
        sd.right_basis = {choi};
    } else {
        std::vector<int> ref_qubits;
        for (int q = n_out; q < n_out + n_in; ++q) ref_qubits.push_back(q);
        sd = schmidt(choi, ref_qubits);
    }
    return {LinearMap(std::move(n_mat), n_in, n_out), std::move(sd)};
}

}  // namespace mbqc
