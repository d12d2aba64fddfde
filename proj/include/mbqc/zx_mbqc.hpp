#pragma once

#include "mbqc/complex_matrix.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/zx.hpp"

namespace mbqc::zx {

/// The 1->0 red spider of phase gamma expanded as a superposition of green
/// effects: green(0) + e^{i gamma} green(pi). The sum evaluates to sqrt(2)
/// times the red spider (the expansion drops a fixed 1/sqrt(2)).
DiagramSum red_measurement_expand(double phase);

/// Boundary effect of an xz-plane measurement at polar angle theta with
/// outcome s, as the two-term green superposition obtained by expanding the
/// red spider: coefficients (1, e^{i(theta + pi s)}) on green(pi/2) and
/// green(3 pi/2). Evaluates, up to scalar, to the bra of the measured
/// eigenstate.
DiagramSum xz_measurement_effect(double theta, int s);

/// Cluster/graph-state diagram for a pattern: one green spider per node,
/// Hadamard edges for CZ, open ports on input and output nodes. Measured
/// nodes carry no effect yet.
ZxDiagram cluster_diagram(const MeasurementPattern& pattern);

/// Full pipeline: cluster diagram plus one measurement effect per non-output
/// node (outcomes aligned with the pattern's measurement order). Arbitrary
/// bases are supported by fusing a green(pi/2 - phi) into the node and
/// hanging a red(theta + pi s) off it.
ZxDiagram measured_pattern_diagram(const MeasurementPattern& pattern,
                                   const std::vector<int>& outcomes);

inline ComplexMatrix eval_matrix(const ZxDiagram& d, std::size_t cap) {
    return to_matrix(d, cap);
}
inline ComplexMatrix eval_matrix(const DiagramSum& s, std::size_t cap) {
    return to_matrix(s, cap);
}
inline ComplexMatrix eval_matrix(const ComplexMatrix& m, std::size_t) { return m; }

/// Equality up to a complex scalar between any mix of diagrams, sums and
/// matrices.
template <class A, class B>
bool verify_equiv(const A& a, const B& b, double tol = 1e-10, std::size_t cap = 40) {
    return equal_up_to_scalar(eval_matrix(a, cap), eval_matrix(b, cap), tol);
}

/// Least-squares scalar z with a ~ z*b; meaningful when verify_equiv holds.
template <class A, class B>
cplx scalar_ratio(const A& a, const B& b, std::size_t cap = 40) {
    const ComplexMatrix ma = eval_matrix(a, cap);
    const ComplexMatrix mb = eval_matrix(b, cap);
    return frobenius_inner(mb, ma) / frobenius_inner(mb, mb).real();
}

}  // namespace mbqc::zx
