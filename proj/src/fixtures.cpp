#include "mbqc/fixtures.hpp"

#include <stdexcept>

#include "mbqc/zx_mbqc.hpp"

namespace mbqc {

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

MeasurementPattern fig1c_pattern(double epsilon) {
    return MeasurementPattern(
        {NodeRole::Input, NodeRole::Middle, NodeRole::Output}, {{0, 1}, {1, 2}},
        {{0, MeasurementBasis::x()}, {1, MeasurementBasis::xz_tilt(epsilon)}});
}

MeasurementPattern fig1d_pattern(double epsilon) {
    return MeasurementPattern(
        {NodeRole::Input, NodeRole::Middle, NodeRole::Output}, {{0, 1}, {1, 2}},
        {{0, MeasurementBasis::xz_tilt(epsilon)}, {1, MeasurementBasis::x()}});
}

MeasurementPattern ite_chain_pattern(double epsilon, int n) {
    if (n < 1) throw std::invalid_argument("ite_chain_pattern: n must be >= 1");
    const int nodes = 2 * n + 1;
    std::vector<NodeRole> roles(nodes, NodeRole::Middle);
    roles[0] = NodeRole::Input;
    roles[nodes - 1] = NodeRole::Output;
    std::vector<std::pair<int, int>> edges;
    std::map<int, MeasurementBasis> bases;
    for (int v = 0; v + 1 < nodes; ++v) {
        edges.push_back({v, v + 1});
        bases[v] = (v % 2 == 0) ? MeasurementBasis::xz_tilt(epsilon) : MeasurementBasis::x();
    }
    return MeasurementPattern(std::move(roles), std::move(edges), std::move(bases));
}

const TwoQubitGrid& two_qubit_grid() {
    // 2x3 grid found by exhaustive search over two-row geometries: the
    // special site (2) sits mid-row between the inputs' row neighbors, the
    // bridge (3) carries the crossing. All-X action is exactly SWAP.
    static const TwoQubitGrid grid = [] {
        TwoQubitGrid g;
        g.nodes = 6;
        g.edges = {{0, 2}, {2, 5}, {1, 3}, {3, 4}, {0, 3}, {3, 5}};
        g.inputs = {0, 1};
        g.outputs = {4, 5};
        g.special_node = 2;
        return g;
    }();
    return grid;
}

namespace {

MeasurementPattern grid_pattern(const MeasurementBasis& special) {
    const TwoQubitGrid& g = two_qubit_grid();
    std::vector<NodeRole> roles(g.nodes, NodeRole::Middle);
    for (int v : g.inputs) roles[v] = NodeRole::Input;
    for (int v : g.outputs) roles[v] = NodeRole::Output;
    std::map<int, MeasurementBasis> bases;
    for (int v = 0; v < g.nodes; ++v) {
        if (roles[v] == NodeRole::Output) continue;
        bases[v] = v == g.special_node ? special : MeasurementBasis::x();
    }
    return MeasurementPattern(std::move(roles), g.edges, std::move(bases));
}

}  // namespace

// The grid realizes the target gates with the mirrored angle convention on
// the special site (tilt towards -z, azimuth -phi); the search pinned the
// signs together with the geometry.
MeasurementPattern fig1e_pattern(double epsilon) {
    return grid_pattern(MeasurementBasis::xz_tilt(-epsilon));
}

MeasurementPattern fig6_pattern(double phi) {
    return grid_pattern(MeasurementBasis(kHalfPi, -phi));
}

namespace zx {

mbqc::zx::ZxDiagram teleport_diagram(int s1, int s2) {
    MeasurementPattern chain(
        {NodeRole::Input, NodeRole::Middle, NodeRole::Output}, {{0, 1}, {1, 2}},
        {{0, MeasurementBasis::x()}, {1, MeasurementBasis::x()}});
    return mbqc::zx::measured_pattern_diagram(chain, {s1, s2});
}

mbqc::zx::ZxDiagram fig1d_diagram(double epsilon, int s1, int s2) {
    return mbqc::zx::measured_pattern_diagram(fig1d_pattern(epsilon), {s1, s2});
}

mbqc::zx::ZxDiagram fig7_diagram(double epsilon) {
    const auto pattern = fig1e_pattern(epsilon);
    return mbqc::zx::measured_pattern_diagram(
        pattern, std::vector<int>(pattern.n_measured(), 0));
}

mbqc::zx::ZxDiagram nonunitary_bubble(double epsilon) {
    using mbqc::zx::SpiderColor;
    using mbqc::zx::WireEnd;
    mbqc::zx::ZxDiagram d;
    d.n_inputs = 1;
    d.n_outputs = 1;
    const int body = d.add_spider(SpiderColor::Red, kHalfPi);
    const int tip = d.add_spider(SpiderColor::Green, kHalfPi + epsilon);
    d.connect(WireEnd::input(0), WireEnd::spider(body));
    d.connect(WireEnd::spider(body), WireEnd::output(0));
    d.connect(WireEnd::spider(body), WireEnd::spider(tip));
    return d;
}

}  // namespace zx

}  // namespace mbqc
