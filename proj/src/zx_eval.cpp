#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "mbqc/zx.hpp"

namespace mbqc::zx {

namespace {

constexpr int kMaxTensorLegs = 22;

// Small dense tensor over binary legs; data index bit m corresponds to
// axes[m]. Axis ids are globally unique, shared by at most two tensors.
struct Tensor {
    std::vector<int> axes;
    std::vector<cplx> data;

    int legs() const { return static_cast<int>(axes.size()); }
};

Tensor spider_tensor(const Spider& s, int degree) {
    Tensor t;
    t.axes.resize(degree);
    t.data.assign(std::size_t{1} << degree, cplx{0.0, 0.0});
    const cplx ph = std::polar(1.0, s.phase);
    if (s.color == SpiderColor::Green) {
        t.data[0] += 1.0;
        t.data[t.data.size() - 1] += ph;
    } else {
        const double scale = std::pow(0.5, 0.5 * degree);
        for (std::size_t i = 0; i < t.data.size(); ++i) {
            const double sign = (std::popcount(i) & 1) ? -1.0 : 1.0;
            t.data[i] = scale * (cplx{1.0, 0.0} + ph * sign);
        }
    }
    return t;
}

Tensor delta_tensor(int axis_a, int axis_b) {
    Tensor t;
    t.axes = {axis_a, axis_b};
    t.data = {1.0, 0.0, 0.0, 1.0};
    return t;
}

Tensor hadamard_tensor(int axis_a, int axis_b) {
    constexpr double r = 0.7071067811865475244;
    Tensor t;
    t.axes = {axis_a, axis_b};
    t.data = {r, r, r, -r};
    return t;
}

std::vector<int> shared_axes(const Tensor& a, const Tensor& b) {
    std::vector<int> s;
    for (int ax : a.axes) {
        for (int bx : b.axes) {
            if (ax == bx) {
                s.push_back(ax);
                break;
            }
        }
    }
    return s;
}

int axis_position(const Tensor& t, int axis) {
    for (int i = 0; i < t.legs(); ++i) {
        if (t.axes[i] == axis) return i;
    }
    return -1;
}

Tensor contract(const Tensor& a, const Tensor& b, const std::vector<int>& shared) {
    Tensor out;
    for (int ax : a.axes) {
        if (axis_position(b, ax) < 0) out.axes.push_back(ax);
    }
    std::vector<int> b_free;
    for (int bx : b.axes) {
        bool is_shared = false;
        for (int s : shared) is_shared |= (s == bx);
        if (!is_shared) out.axes.push_back(bx);
    }
    if (out.legs() > kMaxTensorLegs) {
        throw std::runtime_error("zx::to_matrix: intermediate tensor too large");
    }

    // scatter tables: result/shared bit -> index contribution in a and b
    const int nr = out.legs();
    const int ns = static_cast<int>(shared.size());
    std::vector<std::uint64_t> ra(nr, 0), rb(nr, 0), sa(ns, 0), sb(ns, 0);
    for (int i = 0; i < nr; ++i) {
        const int pa = axis_position(a, out.axes[i]);
        const int pb = axis_position(b, out.axes[i]);
        if (pa >= 0) ra[i] = std::uint64_t{1} << pa;
        if (pb >= 0) rb[i] = std::uint64_t{1} << pb;
    }
    for (int i = 0; i < ns; ++i) {
        sa[i] = std::uint64_t{1} << axis_position(a, shared[i]);
        sb[i] = std::uint64_t{1} << axis_position(b, shared[i]);
    }

    out.data.assign(std::size_t{1} << nr, cplx{0.0, 0.0});
    for (std::uint64_t r = 0; r < out.data.size(); ++r) {
        std::uint64_t base_a = 0, base_b = 0;
        for (int i = 0; i < nr; ++i) {
            if (r & (std::uint64_t{1} << i)) {
                base_a |= ra[i];
                base_b |= rb[i];
            }
        }
        cplx acc = 0.0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << ns); ++s) {
            std::uint64_t ia = base_a, ib = base_b;
            for (int i = 0; i < ns; ++i) {
                if (s & (std::uint64_t{1} << i)) {
                    ia |= sa[i];
                    ib |= sb[i];
                }
            }
            acc += a.data[ia] * b.data[ib];
        }
        out.data[r] = acc;
    }
    return out;
}

}  // namespace

ComplexMatrix to_matrix(const ZxDiagram& d, std::size_t max_wires) {
    d.validate();
    if (d.wires.size() > max_wires) {
        throw std::invalid_argument("zx::to_matrix: wire count exceeds contraction cap");
    }

    // One globally unique axis per wire end; connector tensors realize the
    // wire itself (delta or Hadamard).
    int next_axis = 0;
    std::vector<Tensor> tensors;
    std::vector<std::vector<int>> spider_axes(d.spiders.size());
    std::vector<int> input_axis(d.n_inputs, -1), output_axis(d.n_outputs, -1);

    auto attach = [&](const WireEnd& e, int axis) {
        switch (e.kind) {
            case WireEnd::Kind::Spider: spider_axes[e.index].push_back(axis); break;
            case WireEnd::Kind::Input: input_axis[e.index] = axis; break;
            case WireEnd::Kind::Output: output_axis[e.index] = axis; break;
        }
    };

    for (const auto& w : d.wires) {
        const int ax_a = next_axis++;
        const int ax_b = next_axis++;
        attach(w.a, ax_a);
        attach(w.b, ax_b);
        tensors.push_back(w.hadamard ? hadamard_tensor(ax_a, ax_b) : delta_tensor(ax_a, ax_b));
    }
    for (std::size_t i = 0; i < d.spiders.size(); ++i) {
        Tensor t = spider_tensor(d.spiders[i], static_cast<int>(spider_axes[i].size()));
        t.axes = spider_axes[i];
        tensors.push_back(std::move(t));
    }

    // Greedy pairwise contraction: always take the pair with the smallest
    // resulting tensor.
    while (true) {
        int best_i = -1, best_j = -1, best_legs = kMaxTensorLegs + 1;
        std::vector<int> best_shared;
        for (std::size_t i = 0; i < tensors.size(); ++i) {
            for (std::size_t j = i + 1; j < tensors.size(); ++j) {
                auto sh = shared_axes(tensors[i], tensors[j]);
                if (sh.empty()) continue;
                const int legs = tensors[i].legs() + tensors[j].legs() -
                                 2 * static_cast<int>(sh.size());
                if (legs < best_legs) {
                    best_legs = legs;
                    best_i = static_cast<int>(i);
                    best_j = static_cast<int>(j);
                    best_shared = std::move(sh);
                }
            }
        }
        if (best_i < 0) break;
        Tensor merged = contract(tensors[best_i], tensors[best_j], best_shared);
        tensors.erase(tensors.begin() + best_j);
        tensors[best_i] = std::move(merged);
    }

    // Disconnected pieces multiply; fold scalars, outer-product the rest.
    Tensor result;
    result.data = {d.scalar};
    for (auto& t : tensors) {
        if (result.legs() + t.legs() > kMaxTensorLegs) {
            throw std::runtime_error("zx::to_matrix: open tensor too large");
        }
        Tensor merged;
        merged.axes = result.axes;
        merged.axes.insert(merged.axes.end(), t.axes.begin(), t.axes.end());
        merged.data.assign(std::size_t{1} << merged.axes.size(), cplx{0.0, 0.0});
        for (std::size_t hi = 0; hi < t.data.size(); ++hi) {
            for (std::size_t lo = 0; lo < result.data.size(); ++lo) {
                merged.data[(hi << result.legs()) | lo] = t.data[hi] * result.data[lo];
            }
        }
        result = std::move(merged);
    }

    ComplexMatrix m(std::size_t{1} << d.n_outputs, std::size_t{1} << d.n_inputs);
    std::vector<int> axis_value(static_cast<std::size_t>(next_axis), -1);
    for (std::uint64_t row = 0; row < m.rows(); ++row) {
        for (std::uint64_t col = 0; col < m.cols(); ++col) {
            for (int ax : result.axes) axis_value[ax] = -1;
            bool consistent = true;
            auto assign = [&](int axis, int v) {
                if (axis_value[axis] == -1) axis_value[axis] = v;
                else if (axis_value[axis] != v) consistent = false;
            };
            for (int k = 0; k < d.n_outputs; ++k) assign(output_axis[k], (row >> k) & 1);
            for (int k = 0; k < d.n_inputs; ++k) assign(input_axis[k], (col >> k) & 1);
            if (!consistent) continue;
            std::uint64_t idx = 0;
            for (int i = 0; i < result.legs(); ++i) {
                if (axis_value[result.axes[i]] == 1) idx |= std::uint64_t{1} << i;
            }
            m.at(row, col) = result.data[idx];
        }
    }
    return m;
}

ComplexMatrix to_matrix(const DiagramSum& s, std::size_t max_wires) {
    if (s.terms.empty()) {
        throw std::invalid_argument("zx::to_matrix: empty diagram sum");
    }
    const int ni = s.terms.front().second.n_inputs;
    const int no = s.terms.front().second.n_outputs;
    ComplexMatrix acc(std::size_t{1} << no, std::size_t{1} << ni);
    for (const auto& [coeff, term] : s.terms) {
        if (term.n_inputs != ni || term.n_outputs != no) {
            throw std::invalid_argument("zx::to_matrix: mixed boundary signatures in sum");
        }
        acc = acc + to_matrix(term, max_wires) * coeff;
    }
    return acc;
}

}  // namespace mbqc::zx
