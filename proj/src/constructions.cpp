#include "tpverify/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace tpv {

namespace {

VertexId vid(VertexKind kind, int level, int row) { return VertexId{kind, level, row}; }

// Coordinates of staged (relabeled) vertices: P columns at x = 2*level,
// Q columns at x = 2*level + 1, rows ascending upward.
std::pair<int, int> staged_coords(const VertexId& id) {
    int x = 2 * id.level + (id.kind == VertexKind::Q ? 1 : 0);
    return {x, id.row};
}

VertexKind mirrored_kind(VertexKind kind) {
    switch (kind) {
        case VertexKind::P: return VertexKind::PBar;
        case VertexKind::Q: return VertexKind::QBar;
        case VertexKind::PBar: return VertexKind::P;
        case VertexKind::QBar: return VertexKind::Q;
    }
    throw std::logic_error("mirrored_kind: bad kind");
}

VertexId flat_to_staged(const VertexId& id, std::size_t stage) {
    const int s = static_cast<int>(stage);
    const int new_row = s + 1 - id.row;
    switch (id.kind) {
        case VertexKind::P:
            if (id.level == 0) return vid(VertexKind::P, s, new_row);
            if (id.level == 1) return vid(VertexKind::P, s + 1, new_row);
            break;
        case VertexKind::Q:
            if (id.level == 0) return vid(VertexKind::Q, s, new_row);
            break;
        default:
            break;
    }
    throw std::invalid_argument("relabel_lb: vertex " + to_string(id) +
                                " is not part of a flat block");
}

}  // namespace

LbWeights lb_weights_standard() {
    const QPoly q = QPoly::monomial(1, 1);
    return LbWeights{q, q, QPoly(-1), QPoly(1), QPoly(1)};
}

LbWeights lb_weights_generalized(int variant, long e, long f) {
    if (variant == 1) {
        if (!(f >= e && e >= 0))
            throw std::invalid_argument("lb_weights_generalized: variant 1 needs f >= e >= 0");
        return LbWeights{QPoly::monomial(e, 1), QPoly::monomial(1, 1), QPoly(-e), QPoly(e),
                         QPoly(f - e)};
    }
    if (variant == 2) {
        if (!(e >= 1 && f >= 1))
            throw std::invalid_argument("lb_weights_generalized: variant 2 needs e, f >= 1");
        return LbWeights{QPoly::monomial(e, 1), QPoly::monomial(e, 1), QPoly(-1), QPoly(1),
                         QPoly(f - 1)};
    }
    throw std::invalid_argument("lb_weights_generalized: variant must be 1 or 2");
}

PortedNetwork build_lb(std::size_t n) { return build_lb(n, lb_weights_standard()); }

PortedNetwork build_lb(std::size_t n, const LbWeights& w) {
    const int top = static_cast<int>(n) + 1;
    const QPoly one(1);
    NetworkBuilder b;
    for (int i = 0; i <= top; ++i) b.add_vertex(vid(VertexKind::P, 0, i), 0, -i);
    for (int i = 0; i <= top; ++i) b.add_vertex(vid(VertexKind::Q, 0, i), 1, -i);
    for (int i = 0; i <= top; ++i) b.add_vertex(vid(VertexKind::P, 1, i), 2, -i);
    for (int i = 0; i <= top; ++i)
        b.add_arc(vid(VertexKind::P, 0, i), vid(VertexKind::Q, 0, i), one);
    for (int i = 1; i <= top; ++i)
        b.add_arc(vid(VertexKind::P, 0, i), vid(VertexKind::Q, 0, i - 1),
                  i == 1 ? w.diag_row1 : w.diag_rest);
    for (int i = 0; i <= top; ++i)
        b.add_arc(vid(VertexKind::Q, 0, i), vid(VertexKind::P, 1, i), one);
    for (int i = 2; i <= top; ++i)
        b.add_arc(vid(VertexKind::Q, 0, i), vid(VertexKind::P, 1, i - 1), one);
    b.add_arc(vid(VertexKind::P, 0, 1), vid(VertexKind::P, 1, 0), w.long_arc);
    b.add_arc(vid(VertexKind::Q, 0, 1), vid(VertexKind::P, 1, 0), w.left_arc, ArcTag::left);
    b.add_arc(vid(VertexKind::Q, 0, 1), vid(VertexKind::P, 1, 0), w.right_arc, ArcTag::right);

    PortedNetwork out;
    out.net = b.finish();
    for (int i = 0; i <= top; ++i) out.sources.push_back(vid(VertexKind::P, 0, i));
    for (int i = 0; i <= top; ++i) out.sinks.push_back(vid(VertexKind::P, 1, i));
    return out;
}

PortedNetwork reweight_generalized(int variant, long e, long f, std::size_t n) {
    return build_lb(n, lb_weights_generalized(variant, e, f));
}

PortedNetwork relabel_lb(const PortedNetwork& flat_lb, std::size_t stage) {
    NetworkBuilder b;
    const Network& net = flat_lb.net;
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
        const VertexId id = flat_to_staged(net.vertex(static_cast<int>(i)).id, stage);
        const auto [x, y] = staged_coords(id);
        b.add_vertex(id, x, y);
    }
    for (std::size_t i = 0; i < net.arc_count(); ++i) {
        const Arc& a = net.arc(static_cast<int>(i));
        b.add_arc(flat_to_staged(net.vertex(a.tail).id, stage),
                  flat_to_staged(net.vertex(a.head).id, stage), a.weight, a.tag);
    }
    PortedNetwork out;
    out.net = b.finish();
    for (const VertexId& s : flat_lb.sources) out.sources.push_back(flat_to_staged(s, stage));
    for (const VertexId& s : flat_lb.sinks) out.sinks.push_back(flat_to_staged(s, stage));
    return out;
}

PortedNetwork pad_rails(const PortedNetwork& staged, std::size_t stage) {
    const int m = static_cast<int>(stage);
    const Network& net = staged.net;
    NetworkBuilder b;
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
        const Vertex& v = net.vertex(static_cast<int>(i));
        b.add_vertex(v.id, v.label, v.x, v.y);
    }
    for (int lvl = 0; lvl <= m; ++lvl) {
        const VertexId id = vid(VertexKind::P, lvl, m + 1);
        const auto [x, y] = staged_coords(id);
        b.add_vertex(id, x, y);
    }
    for (std::size_t i = 0; i < net.arc_count(); ++i) {
        const Arc& a = net.arc(static_cast<int>(i));
        b.add_arc(net.vertex(a.tail).id, net.vertex(a.head).id, a.weight, a.tag);
    }
    for (int lvl = 0; lvl + 1 <= m; ++lvl)
        b.add_arc(vid(VertexKind::P, lvl, m + 1), vid(VertexKind::P, lvl + 1, m + 1), QPoly(1));

    PortedNetwork out;
    out.net = b.finish();
    out.sources.push_back(vid(VertexKind::P, 0, m + 1));
    out.sources.insert(out.sources.end(), staged.sources.begin(), staged.sources.end());
    out.sinks.push_back(vid(VertexKind::P, m, m + 1));
    out.sinks.insert(out.sinks.end(), staged.sinks.begin(), staged.sinks.end());
    return out;
}

PortedNetwork glue(std::span<const PortedNetwork> pieces) {
    if (pieces.empty()) throw std::invalid_argument("glue: no pieces");

    std::vector<Vertex> vertices;
    std::set<VertexId> known;
    struct PendingArc {
        VertexId tail;
        VertexId head;
        QPoly weight;
        ArcTag tag;
    };
    std::vector<PendingArc> arcs;
    std::vector<VertexId> boundary;  // previous piece's sinks, final ids

    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const PortedNetwork& piece = pieces[pi];
        std::map<VertexId, VertexId> rename;
        if (pi > 0) {
            const PortedNetwork& prev = pieces[pi - 1];
            if (piece.sources.size() != boundary.size())
                throw std::invalid_argument("glue: boundary size mismatch");
            for (std::size_t r = 0; r < boundary.size(); ++r) {
                const VertexId snk = prev.sinks[r];
                if (!prev.net.out_arcs(prev.net.vertex_index(snk)).empty())
                    throw std::invalid_argument("glue: identified vertex " + to_string(snk) +
                                                " is not a sink");
                const VertexId src = piece.sources[r];
                if (!piece.net.in_arcs(piece.net.vertex_index(src)).empty())
                    throw std::invalid_argument("glue: identified vertex " + to_string(src) +
                                                " is not a source");
                rename[src] = boundary[r];
            }
        }
        const auto mapped = [&](const VertexId& id) {
            const auto it = rename.find(id);
            return it == rename.end() ? id : it->second;
        };

        const Network& net = piece.net;
        for (std::size_t i = 0; i < net.vertex_count(); ++i) {
            const Vertex& v = net.vertex(static_cast<int>(i));
            if (rename.contains(v.id)) continue;  // merged into the earlier piece's vertex
            if (!known.insert(v.id).second)
                throw std::invalid_argument("glue: duplicate vertex " + to_string(v.id));
            vertices.push_back(v);
        }
        for (std::size_t i = 0; i < net.arc_count(); ++i) {
            const Arc& a = net.arc(static_cast<int>(i));
            arcs.push_back(PendingArc{mapped(net.vertex(a.tail).id), mapped(net.vertex(a.head).id),
                                      a.weight, a.tag});
        }
        boundary.clear();
        for (const VertexId& s : piece.sinks) boundary.push_back(mapped(s));
    }

    NetworkBuilder b;
    for (const Vertex& v : vertices) b.add_vertex(v.id, v.label, v.x, v.y);
    for (const PendingArc& a : arcs) b.add_arc(a.tail, a.head, a.weight, a.tag);

    PortedNetwork out;
    out.net = b.finish();
    out.sources = pieces.front().sources;
    out.sinks = std::move(boundary);
    return out;
}

PortedNetwork reflect(const PortedNetwork& ported, int axis_times_two) {
    const Network& net = ported.net;
    const auto mirror = [](const VertexId& id) {
        return VertexId{mirrored_kind(id.kind), id.level, id.row};
    };
    NetworkBuilder b;
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
        const Vertex& v = net.vertex(static_cast<int>(i));
        b.add_vertex(mirror(v.id), axis_times_two - v.x, v.y);
    }
    for (std::size_t i = 0; i < net.arc_count(); ++i) {
        const Arc& a = net.arc(static_cast<int>(i));
        b.add_arc(mirror(net.vertex(a.head).id), mirror(net.vertex(a.tail).id), a.weight, a.tag);
    }
    PortedNetwork out;
    out.net = b.finish();
    for (const VertexId& s : ported.sinks) out.sources.push_back(mirror(s));
    for (const VertexId& s : ported.sources) out.sinks.push_back(mirror(s));
    return out;
}

PortedNetwork build_b(std::size_t n) { return build_b(n, lb_weights_standard()); }

PortedNetwork build_b(std::size_t n, const LbWeights& w) {
    if (n == 0) throw std::invalid_argument("build_b: order must be >= 1");
    PortedNetwork acc = relabel_lb(build_lb(0, w), 0);
    for (std::size_t m = 1; m < n; ++m) {
        const std::array<PortedNetwork, 2> pieces{pad_rails(acc, m), relabel_lb(build_lb(m, w), m)};
        acc = glue(pieces);
    }
    return acc;
}

PortedNetwork build_t(std::size_t n) { return build_t(n, narayana_b_data(n + 2)); }

PortedNetwork build_t(std::size_t n, const RecurrenceData& data) {
    const PolyMatrix diag = t_diagonal(data, n);
    const int nn = static_cast<int>(n);
    NetworkBuilder b;
    for (int i = 0; i <= nn; ++i) b.add_vertex(vid(VertexKind::P, nn, i), 2 * nn, i);
    for (int i = 0; i <= nn; ++i) b.add_vertex(vid(VertexKind::PBar, nn, i), 2 * nn + 1, i);
    for (int i = 0; i <= nn; ++i)
        b.add_arc(vid(VertexKind::P, nn, i), vid(VertexKind::PBar, nn, i),
                  diag.at(static_cast<std::size_t>(nn - i), static_cast<std::size_t>(nn - i)));
    PortedNetwork out;
    out.net = b.finish();
    for (int i = nn; i >= 0; --i) out.sources.push_back(vid(VertexKind::P, nn, i));
    for (int i = nn; i >= 0; --i) out.sinks.push_back(vid(VertexKind::PBar, nn, i));
    return out;
}

namespace {

// Column of the segmented network: all vertices of the given kind and
// level, rows descending.
std::vector<VertexId> column_descending(const Network& net, VertexKind kind, int level) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
        const VertexId id = net.vertex(static_cast<int>(i)).id;
        if (id.kind == kind && id.level == level) out.push_back(id);
    }
    std::sort(out.begin(), out.end(),
              [](const VertexId& a, const VertexId& b) { return a.row > b.row; });
    return out;
}

// Segment position of an arc, decided by its tail column: arcs leaving
// (P,i-1) or (Q,i-1) belong to forward stage i (except the diagonal
// arcs (P,n) -> (PBar,n)); arcs leaving (PBar,i) or (QBar,i-1) belong
// to mirrored stage i.
std::size_t arc_segment_position(const SegmentedNetwork& seg, const VertexId& tail,
                                 const VertexId& head) {
    const int n = static_cast<int>(seg.order);
    switch (tail.kind) {
        case VertexKind::P:
            if (tail.level == n) {
                if (head.kind != VertexKind::PBar)
                    throw std::logic_error("segment assignment: unexpected arc at the diagonal");
                return seg.diagonal_position();
            }
            return seg.forward_position(static_cast<std::size_t>(tail.level) + 1);
        case VertexKind::Q:
            return seg.forward_position(static_cast<std::size_t>(tail.level) + 1);
        case VertexKind::PBar:
            if (tail.level == 0)
                throw std::logic_error("segment assignment: arc leaving a sink column");
            return seg.mirrored_position(static_cast<std::size_t>(tail.level));
        case VertexKind::QBar:
            return seg.mirrored_position(static_cast<std::size_t>(tail.level) + 1);
    }
    throw std::logic_error("segment assignment: bad vertex kind");
}

void attach_segments(SegmentedNetwork& seg) {
    const Network& net = seg.ported.net;
    const std::size_t n = seg.order;
    seg.segments.assign(2 * n + 1, Segment{});
    for (std::size_t i = 1; i <= n; ++i) {
        Segment& fwd = seg.segments[seg.forward_position(i)];
        fwd.kind = SegmentKind::forward;
        fwd.index = i;
        for (const auto& [kind, level] :
             {std::pair{VertexKind::P, static_cast<int>(i) - 1},
              std::pair{VertexKind::Q, static_cast<int>(i) - 1},
              std::pair{VertexKind::P, static_cast<int>(i)}}) {
            const auto col = column_descending(net, kind, level);
            fwd.vertices.insert(fwd.vertices.end(), col.begin(), col.end());
        }
        Segment& mir = seg.segments[seg.mirrored_position(i)];
        mir.kind = SegmentKind::mirrored;
        mir.index = i;
        for (const auto& [kind, level] :
             {std::pair{VertexKind::PBar, static_cast<int>(i)},
              std::pair{VertexKind::QBar, static_cast<int>(i) - 1},
              std::pair{VertexKind::PBar, static_cast<int>(i) - 1}}) {
            const auto col = column_descending(net, kind, level);
            mir.vertices.insert(mir.vertices.end(), col.begin(), col.end());
        }
    }
    Segment& diag = seg.segments[seg.diagonal_position()];
    diag.kind = SegmentKind::diagonal;
    diag.index = 0;
    for (const auto& [kind, level] : {std::pair{VertexKind::P, static_cast<int>(n)},
                                     std::pair{VertexKind::PBar, static_cast<int>(n)}}) {
        const auto col = column_descending(net, kind, level);
        diag.vertices.insert(diag.vertices.end(), col.begin(), col.end());
    }

    seg.arc_segment.assign(net.arc_count(), -1);
    for (std::size_t a = 0; a < net.arc_count(); ++a) {
        const Arc& arc = net.arc(static_cast<int>(a));
        const std::size_t pos = arc_segment_position(seg, net.vertex(arc.tail).id,
                                                     net.vertex(arc.head).id);
        seg.segments[pos].arcs.push_back(static_cast<int>(a));
        seg.arc_segment[a] = static_cast<int>(pos);
    }

    seg.boundaries.clear();
    for (std::size_t bidx = 0; bidx < 2 * n; ++bidx) {
        const bool forward_side = bidx < n;
        const VertexKind kind = forward_side ? VertexKind::P : VertexKind::PBar;
        const int level = forward_side ? static_cast<int>(bidx) + 1 : static_cast<int>(2 * n - bidx);
        seg.boundaries.push_back(column_descending(net, kind, level));
    }
}

}  // namespace

SegmentedNetwork build_h(std::size_t n) {
    return build_h(n, lb_weights_standard(), narayana_b_data(n + 2));
}

SegmentedNetwork build_h(std::size_t n, const LbWeights& w, const RecurrenceData& data) {
    SegmentedNetwork seg;
    seg.order = n;
    if (n == 0) {
        seg.ported = build_t(0, data);
        attach_segments(seg);
        return seg;
    }
    PortedNetwork b = build_b(n, w);
    PortedNetwork t = build_t(n, data);
    PortedNetwork bt = reflect(b, 4 * static_cast<int>(n) + 1);
    const std::array<PortedNetwork, 3> pieces{std::move(b), std::move(t), std::move(bt)};
    seg.ported = glue(pieces);
    attach_segments(seg);
    return seg;
}

SegmentedNetwork build_h_generalized(int variant, long e, long f, std::size_t n) {
    return build_h(n, lb_weights_generalized(variant, e, f),
                   generalized_data(variant, e, f, n + 2));
}

}  // namespace tpv
