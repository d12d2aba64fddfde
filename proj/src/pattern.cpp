#include "mbqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mbqc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}
}  // namespace

MeasurementBasis::MeasurementBasis(double t, double p)
    : theta(wrap_angle(t)), phi(wrap_angle(p)) {
    if (!std::isfinite(t) || !std::isfinite(p)) {
        throw std::invalid_argument("MeasurementBasis: non-finite angle");
    }
}

MeasurementBasis MeasurementBasis::xz_tilt(double eps) {
    return MeasurementBasis(1.5707963267948966 - eps, 0.0);
}

std::array<cplx, 2> MeasurementBasis::eigenstate(int s) const {
    const double c = std::cos(theta / 2.0);
    const double sn = std::sin(theta / 2.0);
    const cplx ph = std::polar(1.0, phi);
    if (s == 0) return {cplx{c, 0.0}, ph * sn};
    return {cplx{sn, 0.0}, -ph * c};
}

MeasurementPattern::MeasurementPattern(std::vector<NodeRole> roles,
                                       std::vector<std::pair<int, int>> edges,
                                       std::map<int, MeasurementBasis> bases,
                                       std::vector<int> order)
    : roles_(std::move(roles)), edges_(std::move(edges)), bases_(std::move(bases)),
      order_(std::move(order)) {
    const int n = node_count();
    if (n == 0) throw std::invalid_argument("MeasurementPattern: no nodes");

    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n || a == b) {
            throw std::invalid_argument("MeasurementPattern: invalid edge");
        }
        if (!seen.insert({a, b}).second) {
            throw std::invalid_argument("MeasurementPattern: duplicate edge");
        }
    }

    for (int v = 0; v < n; ++v) {
        if (roles_[v] == NodeRole::Input) inputs_.push_back(v);
        if (roles_[v] == NodeRole::Output) outputs_.push_back(v);
        const bool measured = roles_[v] != NodeRole::Output;
        if (measured != bases_.count(v)) {
            throw std::invalid_argument(
                "MeasurementPattern: every non-output node needs exactly one basis");
        }
    }

    if (order_.empty()) {
        for (int v : inputs_) order_.push_back(v);
        for (int v = 0; v < n; ++v) {
            if (roles_[v] == NodeRole::Middle) order_.push_back(v);
        }
    } else {
        std::set<int> in_order(order_.begin(), order_.end());
        if (static_cast<int>(order_.size()) != n - n_outputs() ||
            static_cast<int>(in_order.size()) != n - n_outputs()) {
            throw std::invalid_argument(
                "MeasurementPattern: order must be a permutation of non-output nodes");
        }
        for (int v : order_) {
            if (v < 0 || v >= n || roles_[v] == NodeRole::Output) {
                throw std::invalid_argument("MeasurementPattern: order lists an output node");
            }
        }
    }
}

MeasurementPattern MeasurementPattern::with_order(std::vector<int> order) const {
    return MeasurementPattern(roles_, edges_, bases_, std::move(order));
}

void MeasurementPattern::require_outputs() const {
    if (outputs_.empty()) {
        throw std::invalid_argument("MeasurementPattern: at least one output node required");
    }
}

}  // namespace mbqc
