#include "mbqc/zx_rules.hpp"

#include <cmath>
#include <stdexcept>

namespace mbqc::zx {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPhaseTol = 1e-12;

double wrap_phase(double p) {
    double r = std::fmod(p, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

bool phase_is_zero(double p) {
    const double w = wrap_phase(p);
    return w < kPhaseTol || kTwoPi - w < kPhaseTol;
}

bool touches(const Wire& w, int spider) {
    return (w.a.kind == WireEnd::Kind::Spider && w.a.index == spider) ||
           (w.b.kind == WireEnd::Kind::Spider && w.b.index == spider);
}

bool is_self_loop(const Wire& w, int spider) {
    return w.a.kind == WireEnd::Kind::Spider && w.b.kind == WireEnd::Kind::Spider &&
           w.a.index == spider && w.b.index == spider;
}

// Removes spider `victim`, shifting higher spider indices down.
void erase_spider(ZxDiagram& d, int victim) {
    d.spiders.erase(d.spiders.begin() + victim);
    for (auto& w : d.wires) {
        for (WireEnd* e : {&w.a, &w.b}) {
            if (e->kind == WireEnd::Kind::Spider && e->index > victim) --e->index;
        }
    }
}

}  // namespace

bool can_fuse(const ZxDiagram& d, int wire_index) {
    if (wire_index < 0 || wire_index >= static_cast<int>(d.wires.size())) return false;
    const Wire& w = d.wires[wire_index];
    if (w.hadamard) return false;
    if (w.a.kind != WireEnd::Kind::Spider || w.b.kind != WireEnd::Kind::Spider) return false;
    if (w.a.index == w.b.index) return false;
    return d.spiders[w.a.index].color == d.spiders[w.b.index].color;
}

ZxDiagram fuse_spiders(const ZxDiagram& d, int wire_index) {
    if (!can_fuse(d, wire_index)) {
        throw std::invalid_argument("fuse_spiders: wire is not fusible");
    }
    ZxDiagram out = d;
    const Wire w = out.wires[wire_index];
    const int keep = w.a.index;
    const int victim = w.b.index;
    out.spiders[keep].phase = wrap_phase(out.spiders[keep].phase + out.spiders[victim].phase);
    out.wires.erase(out.wires.begin() + wire_index);
    for (auto& wire : out.wires) {
        for (WireEnd* e : {&wire.a, &wire.b}) {
            if (e->kind == WireEnd::Kind::Spider && e->index == victim) e->index = keep;
        }
    }
    erase_spider(out, victim);
    return out;
}

ZxDiagram color_change(const ZxDiagram& d, int spider_index) {
    if (spider_index < 0 || spider_index >= static_cast<int>(d.spiders.size())) {
        throw std::invalid_argument("color_change: no such spider");
    }
    ZxDiagram out = d;
    auto& sp = out.spiders[spider_index];
    sp.color = sp.color == SpiderColor::Green ? SpiderColor::Red : SpiderColor::Green;
    for (auto& w : out.wires) {
        int hits = 0;
        if (w.a.kind == WireEnd::Kind::Spider && w.a.index == spider_index) ++hits;
        if (w.b.kind == WireEnd::Kind::Spider && w.b.index == spider_index) ++hits;
        if (hits & 1) w.hadamard = !w.hadamard;
    }
    return out;
}

namespace {

// Each helper applies one rule instance if possible; returns true on change.

bool try_drop_self_loop(ZxDiagram& d) {
    for (std::size_t i = 0; i < d.wires.size(); ++i) {
        const Wire& w = d.wires[i];
        if (w.a.kind != WireEnd::Kind::Spider || !is_self_loop(w, w.a.index)) continue;
        const int sp = w.a.index;
        if (w.hadamard) {
            // loop through H flips the phase and costs 1/sqrt(2)
            d.spiders[sp].phase = wrap_phase(d.spiders[sp].phase + 3.141592653589793238462643);
            d.scalar *= 0.7071067811865475244;
        }
        d.wires.erase(d.wires.begin() + i);
        return true;
    }
    return false;
}

bool try_fuse_any(ZxDiagram& d) {
    for (std::size_t i = 0; i < d.wires.size(); ++i) {
        if (can_fuse(d, static_cast<int>(i))) {
            d = fuse_spiders(d, static_cast<int>(i));
            return true;
        }
    }
    return false;
}

bool try_cancel_hh_pair(ZxDiagram& d) {
    for (std::size_t i = 0; i < d.wires.size(); ++i) {
        const Wire& wi = d.wires[i];
        if (!wi.hadamard) continue;
        if (wi.a.kind != WireEnd::Kind::Spider || wi.b.kind != WireEnd::Kind::Spider) continue;
        if (wi.a.index == wi.b.index) continue;
        if (d.spiders[wi.a.index].color != d.spiders[wi.b.index].color) continue;
        for (std::size_t j = i + 1; j < d.wires.size(); ++j) {
            const Wire& wj = d.wires[j];
            if (!wj.hadamard) continue;
            const bool same = (wj.a == wi.a && wj.b == wi.b) || (wj.a == wi.b && wj.b == wi.a);
            if (!same) continue;
            d.wires.erase(d.wires.begin() + j);
            d.wires.erase(d.wires.begin() + i);
            d.scalar *= 0.5;
            return true;
        }
    }
    return false;
}

bool try_remove_identity_spider(ZxDiagram& d) {
    for (int sp = 0; sp < static_cast<int>(d.spiders.size()); ++sp) {
        if (!phase_is_zero(d.spiders[sp].phase)) continue;
        int w1 = -1, w2 = -1, ends = 0;
        for (std::size_t i = 0; i < d.wires.size(); ++i) {
            if (is_self_loop(d.wires[i], sp)) {
                ends += 2;
            } else if (touches(d.wires[i], sp)) {
                ++ends;
                if (w1 < 0) w1 = static_cast<int>(i);
                else w2 = static_cast<int>(i);
            }
        }
        if (ends != 2 || w1 < 0 || w2 < 0) continue;  // self-loops handled elsewhere
        WireEnd far1 = touches(d.wires[w1], sp) && d.wires[w1].a.kind == WireEnd::Kind::Spider &&
                               d.wires[w1].a.index == sp
                           ? d.wires[w1].b
                           : d.wires[w1].a;
        WireEnd far2 = d.wires[w2].a.kind == WireEnd::Kind::Spider && d.wires[w2].a.index == sp
                           ? d.wires[w2].b
                           : d.wires[w2].a;
        const bool had = d.wires[w1].hadamard != d.wires[w2].hadamard;
        d.wires.erase(d.wires.begin() + w2);
        d.wires.erase(d.wires.begin() + w1);
        d.wires.push_back({far1, far2, had});
        erase_spider(d, sp);
        return true;
    }
    return false;
}

bool try_absorb_scalar_spider(ZxDiagram& d) {
    for (int sp = 0; sp < static_cast<int>(d.spiders.size()); ++sp) {
        bool isolated = true;
        for (const auto& w : d.wires) {
            if (touches(w, sp)) {
                isolated = false;
                break;
            }
        }
        if (!isolated) continue;
        d.scalar *= cplx{1.0, 0.0} + std::polar(1.0, d.spiders[sp].phase);
        erase_spider(d, sp);
        return true;
    }
    return false;
}

}  // namespace

ZxDiagram simplify(const ZxDiagram& d) {
    ZxDiagram out = d;
    bool changed = true;
    while (changed) {
        changed = try_drop_self_loop(out) || try_fuse_any(out) || try_cancel_hh_pair(out) ||
                  try_remove_identity_spider(out) || try_absorb_scalar_spider(out);
    }
    return out;
}

}  // namespace mbqc::zx
