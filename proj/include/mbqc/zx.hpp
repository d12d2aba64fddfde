#pragma once

#include <cstddef>
#include <vector>

#include "mbqc/complex_matrix.hpp"

namespace mbqc::zx {

enum class SpiderColor { Green, Red };

/// Elementary spider tensor over its legs (all legs interchangeable):
///   green: |0..0><0..0| + e^{i phase} |1..1><1..1|
///   red:   |+..+><+..+| + e^{i phase} |-..-><-..-|
/// both exact, no implicit normalization.
struct Spider {
    SpiderColor color = SpiderColor::Green;
    double phase = 0.0;
};

/// A wire endpoint: a spider, or an open boundary port.
struct WireEnd {
    enum class Kind { Spider, Input, Output };
    Kind kind = Kind::Spider;
    int index = 0;

    static WireEnd spider(int i) { return {Kind::Spider, i}; }
    static WireEnd input(int i) { return {Kind::Input, i}; }
    static WireEnd output(int i) { return {Kind::Output, i}; }

    bool operator==(const WireEnd&) const = default;
};

/// Undirected wire; a Hadamard mark places one H matrix on the wire.
struct Wire {
    WireEnd a, b;
    bool hadamard = false;

    bool operator==(const Wire&) const = default;
};

/// Spider-graph diagram with an exact complex scalar. Every input/output
/// port must be used by exactly one wire end; spiders may have any degree,
/// including zero. Self-loops and parallel wires are legal.
struct ZxDiagram {
    std::vector<Spider> spiders;
    std::vector<Wire> wires;
    int n_inputs = 0;
    int n_outputs = 0;
    cplx scalar{1.0, 0.0};

    int add_spider(SpiderColor color, double phase);
    void connect(WireEnd a, WireEnd b, bool hadamard = false);

    /// Checks port usage and endpoint validity; throws on violation.
    void validate() const;

    /// Structural equality after canonical wire ordering (used for
    /// fixpoint/idempotence checks, not semantic equivalence).
    bool same_structure(const ZxDiagram& other) const;
};

/// Formal complex-weighted sum of diagrams with identical boundary
/// signatures; evaluation is termwise, rewriting happens per term.
struct DiagramSum {
    std::vector<std::pair<cplx, ZxDiagram>> terms;
};

/// Exact tensor contraction: 2^{n_outputs} x 2^{n_inputs} matrix, row bit k
/// = output port k, column bit k = input port k. Contraction picks the
/// cheapest pending wire greedily. `max_wires` guards runaway inputs.
ComplexMatrix to_matrix(const ZxDiagram& d, std::size_t max_wires = 20);
ComplexMatrix to_matrix(const DiagramSum& s, std::size_t max_wires = 20);

}  // namespace mbqc::zx
