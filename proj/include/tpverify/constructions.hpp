#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tpverify/netgraph.hpp"
#include "tpverify/seqmat.hpp"

namespace tpv {

/// A network together with its designated source and sink orderings
/// (the path matrix of interest is taken over these lists).
struct PortedNetwork {
    Network net;
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
};

/// Weights of the distinguished arcs of the three-column building
/// block; every arc not covered here has weight 1.
struct LbWeights {
    QPoly diag_row1;  // P_1 -> Q_0
    QPoly diag_rest;  // P_i -> Q_{i-1} for i >= 2
    QPoly long_arc;   // P_1 -> P'_0 (the only negative arc)
    QPoly left_arc;   // Q_1 -> P'_0 tagged left
    QPoly right_arc;  // Q_1 -> P'_0 tagged right
};

LbWeights lb_weights_standard();
LbWeights lb_weights_generalized(int variant, long e, long f);

/// Three-column block truncated at row n+1, in flat labels: columns
/// (P,0,*), (Q,0,*), (P,1,*) with rows 0..n+1.  Sources/sinks are the
/// P columns in ascending row order, so the path matrix over the ports
/// is exactly coefficient_matrix(..., n).
PortedNetwork build_lb(std::size_t n);
PortedNetwork build_lb(std::size_t n, const LbWeights& w);

/// Same graph as build_lb(n) with the two-parameter weight scheme.
PortedNetwork reweight_generalized(int variant, long e, long f, std::size_t n);

/// Re-labels the flat block for use as the `stage`-th glued piece:
/// flat (P,0,i) becomes (P,stage,stage+1-i), primed column becomes
/// level stage+1, and coordinates move to x = 2*level, y = row.
/// Ports come out in descending row order.
PortedNetwork relabel_lb(const PortedNetwork& flat_lb, std::size_t stage);

/// Adds the rail row on top of a staged triangle network: vertices
/// (P,i,stage+1) for i = 0..stage and unit-weight arcs between
/// consecutive levels, prepending them to the ports.
PortedNetwork pad_rails(const PortedNetwork& staged, std::size_t stage);

/// Identifies each piece's sinks with the next piece's sources (by
/// position).  Identified vertices must be genuine sinks/sources; the
/// merged vertex keeps the earlier piece's identity.
PortedNetwork glue(std::span<const PortedNetwork> pieces);

/// Mirror image about the vertical line x = axis_times_two / 2: arcs
/// reverse, kinds toggle their bar, weights and tags are kept, and the
/// source/sink roles swap.
PortedNetwork reflect(const PortedNetwork& ported, int axis_times_two);

/// Triangle-matrix network of order n (n >= 1): the staged blocks
/// glued with rail padding.  Path matrix over the ports equals
/// cs_matrix(data, n) for the matching weights.
PortedNetwork build_b(std::size_t n);
PortedNetwork build_b(std::size_t n, const LbWeights& w);

/// Diagonal stage: arcs (P,n,i) -> (PBar,n,i); the arc at row i
/// carries diagonal entry n-i so that the path matrix over the
/// descending ports equals t_diagonal(data, n).
PortedNetwork build_t(std::size_t n);
PortedNetwork build_t(std::size_t n, const RecurrenceData& data);

enum class SegmentKind : std::uint8_t { forward, diagonal, mirrored };

struct Segment {
    SegmentKind kind = SegmentKind::forward;
    std::size_t index = 0;  // 1..n for forward/mirrored, 0 for the diagonal
    std::vector<VertexId> vertices;  // columns left to right, rows descending
    std::vector<int> arcs;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Hankel network of order n with its 2n+1 segments (forward stages
/// 1..n, the diagonal stage, mirrored stages n..1) and the 2n internal
/// boundary columns in descending row order.
struct SegmentedNetwork {
    PortedNetwork ported;
    std::size_t order = 0;
    std::vector<Segment> segments;
    std::vector<std::vector<VertexId>> boundaries;
    std::vector<int> arc_segment;  // arc id -> position in `segments`

    std::size_t forward_position(std::size_t i) const { return i - 1; }
    std::size_t diagonal_position() const { return order; }
    std::size_t mirrored_position(std::size_t i) const { return 2 * order + 1 - i; }
};

SegmentedNetwork build_h(std::size_t n);
SegmentedNetwork build_h(std::size_t n, const LbWeights& w, const RecurrenceData& data);
SegmentedNetwork build_h_generalized(int variant, long e, long f, std::size_t n);

}  // namespace tpv
