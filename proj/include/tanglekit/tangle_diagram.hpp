#pragma once

#include <optional>

#include "tanglekit/algebraic_tangle.hpp"
#include "tanglekit/diagram.hpp"
#include "tanglekit/fraction.hpp"

namespace tanglekit {

/// A diagram with exactly four endpoints marked NW, NE, SW, SE and two
/// strands.  Thin checked view over Diagram.
bool is_marked_tangle(const Diagram& d);
std::optional<std::string> marked_tangle_error(const Diagram& d);

/// Two horizontal strands NW-NE, SW-SE.
Diagram zero_tangle();
/// Two vertical strands NW-SW, NE-SE.
Diagram infinity_tangle();

/// Alternating-twist diagram of [a0...an] under the calibrated convention:
/// crossing count = sum |ai|; build_rational_diagram({n}) is n positive
/// horizontal crossings.
Diagram build_rational_diagram(const ContinuedFraction& cf);

/// Diagram for any algebraic tangle expression (leaves via
/// build_rational_diagram, sums by gluing, mirror by crossing flips,
/// rotation by mark relabeling).
Diagram build_tangle_diagram(const AlgebraicTangle& t);

/// East side of d1 glued to west side of d2 (NE1-NW2, SE1-SW2).
Diagram glue_tangle_sum(const Diagram& d1, const Diagram& d2);

/// n positive (n >= 0) or |n| negative horizontal crossings appended on
/// the east side.
Diagram append_horizontal_twists(const Diagram& d, const Int& n);
/// Twists appended on the south side (t -> t/(nt+1) on Conway numbers).
Diagram append_vertical_twists(const Diagram& d, const Int& n);

/// Quarter-turn rotation (marks relabeled so that the Conway number maps
/// t -> -1/t) and mirror image (all crossings flipped).
Diagram rotate_tangle(const Diagram& d);
Diagram mirror_diagram(const Diagram& d);

/// Join N-to-N and S-to-S (Numerator) or E-to-E and W-to-W (Denominator)
/// with crossing-free arcs; result has no endpoints.
Diagram close_tangle(ClosureKind kind, const Diagram& d);

/// Endpoint pairing of the two strands, by tracing.
ConnectivityClass trace_connectivity(const Diagram& d);

}  // namespace tanglekit
