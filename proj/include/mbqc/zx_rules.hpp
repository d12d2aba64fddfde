#pragma once

#include "mbqc/zx.hpp"

namespace mbqc::zx {

/// True iff the wire joins two distinct same-color spiders with no Hadamard
/// mark (the fusion precondition).
bool can_fuse(const ZxDiagram& d, int wire_index);

/// Fuses the two spiders joined by the wire: phases add mod 2pi, legs are
/// concatenated (parallel wires become self-loops). Semantics preserved
/// exactly. Throws if the wire is not fusible.
ZxDiagram fuse_spiders(const ZxDiagram& d, int wire_index);

/// Flips a spider's color and toggles the Hadamard mark on every incident
/// wire end (a self-loop toggles twice, i.e. stays). Exact.
ZxDiagram color_change(const ZxDiagram& d, int spider_index);

/// Fixpoint of the local cleanup rules:
///   - spider fusion,
///   - phase-0 arity-2 spider removal (Hadamard marks compose via XOR),
///   - cancellation of parallel Hadamard-edge pairs between same-color
///     spiders (scalar 1/2 per pair),
///   - self-loop elimination and scalar spider absorption.
/// Each rule is scalar-exact, so to_matrix is preserved exactly.
ZxDiagram simplify(const ZxDiagram& d);

}  // namespace mbqc::zx
