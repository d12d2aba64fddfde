#pragma once

// Shared helpers and independent oracles for the test suites. The oracle
// paths intentionally avoid the engine's collapse-and-remove machinery:
// they build full-register projectors and keep every qubit in place.

#include <cmath>
#include <vector>

#include "mbqc/complex_matrix.hpp"
#include "mbqc/engine.hpp"
#include "mbqc/gates.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/rng.hpp"
#include "mbqc/state_vector.hpp"
#include "mbqc/zx.hpp"

namespace testutil {

using namespace mbqc;

inline StateVector random_state(Rng& rng, int n_qubits) {
    std::vector<cplx> amps(std::uint64_t{1} << n_qubits);
    for (auto& a : amps) a = cplx{rng.normal(), rng.normal()};
    auto s = StateVector::unnormalized(n_qubits, std::move(amps));
    s.renormalize();
    return s;
}

// Projector (1 + n.sigma)/2 (s=0) or (1 - n.sigma)/2 (s=1) on `qubit` of an
// n-qubit register, as a full 2^n x 2^n matrix.
inline ComplexMatrix full_projector(int n, int qubit, const MeasurementBasis& basis, int s) {
    const auto e = basis.eigenstate(s);
    ComplexMatrix p1(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p1.at(i, j) = e[i] * std::conj(e[j]);
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int q = 0; q < n; ++q) {
        out = tensor_product(q == qubit ? p1 : ComplexMatrix::identity(2), out);
    }
    return out;
}

// Full-register oracle for a pattern run with postselected outcomes:
// applies projectors without removing qubits, then reads the output-node
// amplitudes off the surviving block. Returns (joint probability,
// unnormalized output amplitudes in ascending output-node order).
struct OracleRun {
    double probability = 0.0;
    std::vector<cplx> output_amps;
};

inline OracleRun oracle_run(const MeasurementPattern& pattern, const StateVector& input,
                            const std::vector<int>& outcomes) {
    const int n = pattern.node_count();
    StateVector state = inject_input(input, pattern);
    std::vector<cplx> amps = state.amplitudes();

    const auto& order = pattern.measurement_order();
    for (std::size_t m = 0; m < order.size(); ++m) {
        const ComplexMatrix p = full_projector(n, order[m], pattern.basis(order[m]), outcomes[m]);
        std::vector<cplx> next(amps.size(), cplx{0.0, 0.0});
        for (std::uint64_t r = 0; r < amps.size(); ++r) {
            for (std::uint64_t c = 0; c < amps.size(); ++c) {
                if (p.at(r, c) != cplx{0.0, 0.0}) next[r] += p.at(r, c) * amps[c];
            }
        }
        amps = std::move(next);
    }

    OracleRun res;
    for (const auto& a : amps) res.probability += std::norm(a);

    // measured qubits are pinned to their eigenstates; contract them away
    const auto& outputs = pattern.output_nodes();
    res.output_amps.assign(std::uint64_t{1} << outputs.size(), cplx{0.0, 0.0});
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if (amps[idx] == cplx{0.0, 0.0}) continue;
        std::uint64_t out_bits = 0;
        for (std::size_t k = 0; k < outputs.size(); ++k) {
            if (idx & (std::uint64_t{1} << outputs[k])) out_bits |= std::uint64_t{1} << k;
        }
        cplx weight = amps[idx];
        // divide out the measured-qubit eigenstate amplitudes
        for (std::size_t m = 0; m < order.size(); ++m) {
            const auto e = pattern.basis(order[m]).eigenstate(outcomes[m]);
            weight *= std::conj(e[(idx >> order[m]) & 1]);
        }
        res.output_amps[out_bits] += weight;
    }
    // the double sum above counts each output block 1x per measured-basis
    // component; the conjugate weights make it exactly the bra contraction
    return res;
}

inline MeasurementPattern random_pattern(Rng& rng, int max_nodes = 8) {
    const int n = 3 + static_cast<int>(rng.uniform_below(max_nodes - 2));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        edges.push_back({static_cast<int>(rng.uniform_below(v)), v});
    }
    if (n >= 4 && rng.bit(0.5)) {
        const int a = static_cast<int>(rng.uniform_below(n - 2));
        const int b = a + 2;
        bool dup = false;
        for (auto [x, y] : edges) dup |= (x == a && y == b) || (x == b && y == a);
        if (!dup && b < n) edges.push_back({a, b});
    }

    std::vector<NodeRole> roles(n, NodeRole::Middle);
    const int n_out = 1 + static_cast<int>(rng.uniform_below(2));
    const int n_in = static_cast<int>(rng.uniform_below(3));
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::swap(ids[i], ids[rng.uniform_below(static_cast<std::uint64_t>(i) + 1)]);
    }
    for (int k = 0; k < n_out; ++k) roles[ids[k]] = NodeRole::Output;
    for (int k = 0; k < std::min(n_in, n - n_out); ++k) roles[ids[n_out + k]] = NodeRole::Input;

    std::map<int, MeasurementBasis> bases;
    for (int v = 0; v < n; ++v) {
        if (roles[v] == NodeRole::Output) continue;
        bases[v] = MeasurementBasis(rng.uniform01() * 3.141592653589793,
                                    rng.uniform01() * 6.283185307179586);
    }
    return MeasurementPattern(std::move(roles), std::move(edges), std::move(bases));
}

// True if a = z*b for nonzero z, or both are (numerically) zero.
inline bool same_up_to_scalar_or_zero(const ComplexMatrix& a, const ComplexMatrix& b,
                                      double tol = 1e-10) {
    const double na = a.frobenius_norm();
    const double nb = b.frobenius_norm();
    if (na < 1e-12 && nb < 1e-12) return true;
    if (na < 1e-12 || nb < 1e-12) return false;
    return equal_up_to_scalar(a, b, tol);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

inline mbqc::zx::ZxDiagram random_diagram(Rng& rng) {
    using namespace mbqc::zx;
    ZxDiagram d;
    const int n_sp = 1 + static_cast<int>(rng.uniform_below(6));
    const double phase_pool[] = {0.0, 1.5707963267948966, 3.141592653589793, 0.37, 2.6};
    for (int i = 0; i < n_sp; ++i) {
        d.add_spider(rng.bit(0.5) ? SpiderColor::Green : SpiderColor::Red,
                     phase_pool[rng.uniform_below(5)]);
    }
    d.n_inputs = static_cast<int>(rng.uniform_below(3));
    d.n_outputs = static_cast<int>(rng.uniform_below(3));
    for (int k = 0; k < d.n_inputs; ++k) {
        d.connect(WireEnd::input(k),
                  WireEnd::spider(static_cast<int>(rng.uniform_below(n_sp))), rng.bit(0.3));
    }
    for (int k = 0; k < d.n_outputs; ++k) {
        d.connect(WireEnd::output(k),
                  WireEnd::spider(static_cast<int>(rng.uniform_below(n_sp))), rng.bit(0.3));
    }
    const int extra = static_cast<int>(rng.uniform_below(7));
    for (int k = 0; k < extra && d.wires.size() < 10; ++k) {
        const int a = static_cast<int>(rng.uniform_below(n_sp));
        const int b = static_cast<int>(rng.uniform_below(n_sp));
        d.connect(WireEnd::spider(a), WireEnd::spider(b), rng.bit(0.4));
    }
    return d;
}

}  // namespace testutil
