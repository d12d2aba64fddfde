#include "mbqc/zx_mbqc.hpp"

#include <cmath>
#include <stdexcept>

namespace mbqc::zx {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kHalfPi = 1.5707963267948966;

ZxDiagram green_effect(double phase) {
    ZxDiagram d;
    d.n_inputs = 1;
    const int s = d.add_spider(SpiderColor::Green, phase);
    d.connect(WireEnd::input(0), WireEnd::spider(s));
    return d;
}
}  // namespace

DiagramSum red_measurement_expand(double phase) {
    DiagramSum sum;
    sum.terms.emplace_back(cplx{1.0, 0.0}, green_effect(0.0));
    sum.terms.emplace_back(std::polar(1.0, phase), green_effect(kPi));
    return sum;
}

DiagramSum xz_measurement_effect(double theta, int s) {
    const double gamma = theta + (s & 1) * kPi;
    DiagramSum sum;
    sum.terms.emplace_back(cplx{1.0, 0.0}, green_effect(kHalfPi));
    sum.terms.emplace_back(std::polar(1.0, gamma), green_effect(kHalfPi + kPi));
    return sum;
}

ZxDiagram cluster_diagram(const MeasurementPattern& pattern) {
    ZxDiagram d;
    d.n_inputs = pattern.n_inputs();
    d.n_outputs = pattern.n_outputs();
    for (int v = 0; v < pattern.node_count(); ++v) {
        d.add_spider(SpiderColor::Green, 0.0);
    }
    for (const auto& [a, b] : pattern.edges()) {
        d.connect(WireEnd::spider(a), WireEnd::spider(b), /*hadamard=*/true);
    }
    const auto& inputs = pattern.input_nodes();
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        d.connect(WireEnd::input(static_cast<int>(k)), WireEnd::spider(inputs[k]));
    }
    const auto& outputs = pattern.output_nodes();
    for (std::size_t k = 0; k < outputs.size(); ++k) {
        d.connect(WireEnd::output(static_cast<int>(k)), WireEnd::spider(outputs[k]));
    }
    return d;
}

ZxDiagram measured_pattern_diagram(const MeasurementPattern& pattern,
                                   const std::vector<int>& outcomes) {
    const auto& order = pattern.measurement_order();
    if (outcomes.size() != order.size()) {
        throw std::invalid_argument("measured_pattern_diagram: outcome count mismatch");
    }
    ZxDiagram d = cluster_diagram(pattern);
    for (std::size_t m = 0; m < order.size(); ++m) {
        const int node = order[m];
        const MeasurementBasis& basis = pattern.basis(node);
        const int s = outcomes[m] & 1;
        if (std::abs(basis.theta - kHalfPi) < 1e-12) {
            // xy-plane measurement: pure green effect, fused into the node
            d.spiders[node].phase += -basis.phi + s * kPi;
        } else {
            // tilted measurement: green(pi/2 - phi) fused into the node with
            // a red(theta + pi s) hanging off it
            d.spiders[node].phase += kHalfPi - basis.phi;
            const int red = d.add_spider(SpiderColor::Red, basis.theta + s * kPi);
            d.connect(WireEnd::spider(node), WireEnd::spider(red));
        }
    }
    return d;
}

}  // namespace mbqc::zx
