#include "mbqc/zx.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mbqc::zx {

int ZxDiagram::add_spider(SpiderColor color, double phase) {
    spiders.push_back({color, phase});
    return static_cast<int>(spiders.size()) - 1;
}

void ZxDiagram::connect(WireEnd a, WireEnd b, bool hadamard) {
    wires.push_back({a, b, hadamard});
}

void ZxDiagram::validate() const {
    std::vector<int> in_use(n_inputs, 0), out_use(n_outputs, 0);
    for (const auto& w : wires) {
        for (const WireEnd& e : {w.a, w.b}) {
            switch (e.kind) {
                case WireEnd::Kind::Spider:
                    if (e.index < 0 || e.index >= static_cast<int>(spiders.size())) {
                        throw std::invalid_argument("ZxDiagram: wire references missing spider");
                    }
                    break;
                case WireEnd::Kind::Input:
                    if (e.index < 0 || e.index >= n_inputs) {
                        throw std::invalid_argument("ZxDiagram: wire references missing input");
                    }
                    ++in_use[e.index];
                    break;
                case WireEnd::Kind::Output:
                    if (e.index < 0 || e.index >= n_outputs) {
                        throw std::invalid_argument("ZxDiagram: wire references missing output");
                    }
                    ++out_use[e.index];
                    break;
            }
        }
    }
    for (int c : in_use) {
        if (c != 1) throw std::invalid_argument("ZxDiagram: each input port needs exactly one wire");
    }
    for (int c : out_use) {
        if (c != 1) throw std::invalid_argument("ZxDiagram: each output port needs exactly one wire");
    }
}

namespace {

std::tuple<int, int, int, int, bool> wire_key(const Wire& w) {
    auto end_key = [](const WireEnd& e) {
        return std::pair<int, int>(static_cast<int>(e.kind), e.index);
    };
    auto ka = end_key(w.a);
    auto kb = end_key(w.b);
    if (kb < ka) std::swap(ka, kb);
    return {ka.first, ka.second, kb.first, kb.second, w.hadamard};
}

}  // namespace

bool ZxDiagram::same_structure(const ZxDiagram& other) const {
    if (n_inputs != other.n_inputs || n_outputs != other.n_outputs) return false;
    if (spiders.size() != other.spiders.size() || wires.size() != other.wires.size()) return false;
    for (std::size_t i = 0; i < spiders.size(); ++i) {
        if (spiders[i].color != other.spiders[i].color) return false;
        if (std::abs(spiders[i].phase - other.spiders[i].phase) > 1e-12) return false;
    }
    auto keys = [](const std::vector<Wire>& ws) {
        std::vector<std::tuple<int, int, int, int, bool>> ks;
        ks.reserve(ws.size());
        for (const auto& w : ws) ks.push_back(wire_key(w));
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    return keys(wires) == keys(other.wires) && std::abs(scalar - other.scalar) <= 1e-12;
}

}  // namespace mbqc::zx
