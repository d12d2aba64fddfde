#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mbqc/complex_matrix.hpp"

namespace mbqc {

/// Measurement direction on the Bloch sphere:
///   n = (sin t cos p, sin t sin p, cos t).
/// Outcome s=0 projects onto the +1 eigenstate (cos(t/2), e^{ip} sin(t/2)),
/// s=1 onto its orthogonal complement (sin(t/2), -e^{ip} cos(t/2)).
/// The xz-plane tilt angle eps used throughout maps to theta = pi/2 - eps,
/// phi = 0.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    MeasurementBasis() = default;
    MeasurementBasis(double t, double p);

    static MeasurementBasis x() { return {1.5707963267948966, 0.0}; }
    static MeasurementBasis z() { return {0.0, 0.0}; }
    /// xz-plane basis at tilt eps away from x towards z.
    static MeasurementBasis xz_tilt(double eps);

    std::array<cplx, 2> eigenstate(int s) const;
};

enum class NodeRole { Input, Middle, Output };

/// An MBQC program: a simple graph with node roles, one basis per non-output
/// node and a measurement order (defaults to inputs first, then middles, by
/// ascending node id).
class MeasurementPattern {
public:
    MeasurementPattern(std::vector<NodeRole> roles,
                       std::vector<std::pair<int, int>> edges,
                       std::map<int, MeasurementBasis> bases,
                       std::vector<int> order = {});

    int node_count() const { return static_cast<int>(roles_.size()); }
    NodeRole role(int node) const { return roles_.at(node); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const MeasurementBasis& basis(int node) const { return bases_.at(node); }
    const std::vector<int>& measurement_order() const { return order_; }

    /// Node ids by role, ascending.
    const std::vector<int>& input_nodes() const { return inputs_; }
    const std::vector<int>& output_nodes() const { return outputs_; }

    int n_inputs() const { return static_cast<int>(inputs_.size()); }
    int n_outputs() const { return static_cast<int>(outputs_.size()); }
    int n_measured() const { return static_cast<int>(order_.size()); }

    /// Same pattern with a different measurement order (must be a
    /// permutation of the non-output nodes).
    MeasurementPattern with_order(std::vector<int> order) const;

    /// Throws unless the pattern has at least one output (required before
    /// running or extracting operators; inject-only degenerate patterns may
    /// have none).
    void require_outputs() const;

private:
    std::vector<NodeRole> roles_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, MeasurementBasis> bases_;
    std::vector<int> order_;
    std::vector<int> inputs_;
    std::vector<int> outputs_;
};

}  // namespace mbqc
