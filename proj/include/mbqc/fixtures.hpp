#pragma once

#include "mbqc/pattern.hpp"
#include "mbqc/zx.hpp"

namespace mbqc {

/// 3-node chain, input measured in X, middle tilted by eps in the xz plane.
MeasurementPattern fig1c_pattern(double epsilon);

/// 3-node chain, input tilted by eps in the xz plane, middle measured in X.
MeasurementPattern fig1d_pattern(double epsilon);

/// Chain of 2n+1 nodes alternating tilted and X measurements; concatenates
/// n tilt gates (imaginary-time steps) from input node 0 to output node 2n.
MeasurementPattern ite_chain_pattern(double epsilon, int n);

/// Two-qubit grid with 2 inputs and 2 outputs whose all-X action is SWAP;
/// one site carries the special basis. The concrete geometry was found by
/// searching small grids against the closed-form targets and is validated
/// by the test suite.
struct TwoQubitGrid {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> inputs;
    std::vector<int> outputs;
    int special_node = 0;
};
const TwoQubitGrid& two_qubit_grid();

/// Grid pattern with the special site tilted by eps in the xz plane:
/// realizes (cos(eps/2) I - sin(eps/2) XX) SWAP on all-zero outcomes.
MeasurementPattern fig1e_pattern(double epsilon);

/// Grid pattern with the special site measured in the xy plane:
/// realizes exp(-i(phi/2) XX) SWAP on all-zero outcomes.
MeasurementPattern fig6_pattern(double phi);

namespace zx {

/// ZX form of the measured 3-chain teleportation with X outcomes s1, s2;
/// simplifies to the byproduct X^{s2} Z^{s1}.
mbqc::zx::ZxDiagram teleport_diagram(int s1, int s2);

/// ZX form of the tilted 3-chain (input tilted, middle X).
mbqc::zx::ZxDiagram fig1d_diagram(double epsilon, int s1, int s2);

/// ZX form of the two-qubit grid with the special site tilted by eps;
/// evaluates to (cos(eps/2) I - sin(eps/2) XX) SWAP up to scalar.
mbqc::zx::ZxDiagram fig7_diagram(double epsilon);

/// The 1->1 nonunitary subdiagram of the simplified grid: a red(pi/2)
/// spider decorated with a green(pi/2 + eps) state; evaluates to
/// I - tan(eps/2) X up to scalar.
mbqc::zx::ZxDiagram nonunitary_bubble(double epsilon);

}  // namespace zx

}  // namespace mbqc
