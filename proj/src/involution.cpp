#include "tpverify/involution.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tpv {

namespace {

std::optional<int> try_arc(const Network& net, const VertexId& tail, const VertexId& head,
                           ArcTag tag) {
    const auto t = net.find_vertex(tail);
    const auto h = net.find_vertex(head);
    if (!t || !h) return std::nullopt;
    for (const int aid : net.out_arcs(*t)) {
        const Arc& a = net.arc(aid);
        if (a.head == *h && a.tag == tag) return aid;
    }
    return std::nullopt;
}

/// Addressing of a three-column block, either in flat labels (levels
/// 0/0/1, logical index = row) or as stage i of a glued network (the
/// relabeling maps logical index m to row i - m).
struct BlockFrame {
    const Network* net = nullptr;
    bool staged = false;
    int stage = 1;

    VertexId pv(int m) const {
        return staged ? VertexId{VertexKind::P, stage - 1, stage - m}
                      : VertexId{VertexKind::P, 0, m};
    }
    VertexId qv(int m) const {
        return staged ? VertexId{VertexKind::Q, stage - 1, stage - m}
                      : VertexId{VertexKind::Q, 0, m};
    }
    VertexId ppv(int m) const {
        return staged ? VertexId{VertexKind::P, stage, stage - m} : VertexId{VertexKind::P, 1, m};
    }

    std::optional<int> source_logical(const VertexId& id) const {
        if (id.kind != VertexKind::P || id.level != (staged ? stage - 1 : 0)) return std::nullopt;
        const int m = staged ? stage - id.row : id.row;
        return m >= 0 ? std::optional<int>(m) : std::nullopt;
    }
    std::optional<int> sink_logical(const VertexId& id) const {
        if (id.kind != VertexKind::P || id.level != (staged ? stage : 1)) return std::nullopt;
        const int m = staged ? stage - id.row : id.row;
        return m >= 0 ? std::optional<int>(m) : std::nullopt;
    }

    bool two_arc(const Path& p, const VertexId& a, const VertexId& b, const VertexId& c,
                 ArcTag tag2) const {
        if (p.arcs.size() != 2) return false;
        const auto a1 = try_arc(*net, a, b, ArcTag::none);
        const auto a2 = try_arc(*net, b, c, tag2);
        return a1 && a2 && p.arcs[0] == *a1 && p.arcs[1] == *a2;
    }
    bool is_direct(const Path& p) const {
        if (p.arcs.size() != 1) return false;
        const auto a = try_arc(*net, pv(1), ppv(0), ArcTag::none);
        return a && p.arcs[0] == *a;
    }
    bool is_via_q1(const Path& p, ArcTag tag) const { return two_arc(p, pv(1), qv(1), ppv(0), tag); }
    bool is_hook(const Path& p, int m) const {
        return two_arc(p, pv(m), qv(m - 1), ppv(m - 1), ArcTag::none);
    }
    bool is_antihook(const Path& p, int l) const {
        return two_arc(p, pv(l), qv(l), ppv(l - 1), ArcTag::none);
    }

    Path make_direct() const {
        return Path{net->vertex_index(pv(1)), {net->arc_index(pv(1), ppv(0))}};
    }
    Path make_via_q1(ArcTag tag) const {
        return Path{net->vertex_index(pv(1)),
                    {net->arc_index(pv(1), qv(1)), net->arc_index(qv(1), ppv(0), tag)}};
    }
    Path make_hook(int m) const {
        return Path{net->vertex_index(pv(m)),
                    {net->arc_index(pv(m), qv(m - 1)), net->arc_index(qv(m - 1), ppv(m - 1))}};
    }
    Path make_antihook(int l) const {
        return Path{net->vertex_index(pv(l)),
                    {net->arc_index(pv(l), qv(l)), net->arc_index(qv(l), ppv(l - 1))}};
    }
};

/// Block components of a segment piece with their logical indices,
/// ordered ascending by source index, remembering where each came from
/// in the piece.
struct CoreView {
    std::vector<Path> paths;
    std::vector<int> I;
    std::vector<int> J;
    std::vector<std::size_t> positions;
};

PropertyKind classify_core(const BlockFrame& fr, const std::vector<Path>& paths) {
    if (paths.empty()) return PropertyKind::none;
    const Path& p1 = paths.front();
    const bool t1 = fr.is_direct(p1);
    const bool t2 = fr.is_via_q1(p1, ArcTag::left);
    bool t3 = false;
    if (fr.is_hook(p1, 1)) {
        for (std::size_t m = 2; m <= paths.size(); ++m) {
            if (fr.is_hook(paths[m - 1], static_cast<int>(m))) continue;
            t3 = fr.is_antihook(paths[m - 1], static_cast<int>(m));
            break;
        }
    }
    if (static_cast<int>(t1) + static_cast<int>(t2) + static_cast<int>(t3) > 1)
        throw std::logic_error("cancellation patterns matched more than one tag");
    if (t1) return PropertyKind::p1;
    if (t2) return PropertyKind::p2;
    if (t3) return PropertyKind::p3;
    return PropertyKind::none;
}

/// The involution on a block family; mutates `core` and reports whether
/// anything moved.  Dispatch follows the case analysis on (i1, j1) and
/// (i2, j2); uncovered situations are hard errors, as are inputs that
/// contradict vertex-disjointness.
bool phi_core(const BlockFrame& fr, CoreView& core) {
    const std::size_t k = core.paths.size();
    if (k == 0) return false;
    const int i1 = core.I[0];
    const int j1 = core.J[0];

    const auto swap_first = [&]() {
        if (fr.is_direct(core.paths[0])) {
            core.paths[0] = fr.make_via_q1(ArcTag::left);
            return true;
        }
        if (fr.is_via_q1(core.paths[0], ArcTag::left)) {
            core.paths[0] = fr.make_direct();
            return true;
        }
        return false;
    };

    if (k == 1) return (i1 == 1 && j1 == 0) ? swap_first() : false;

    if (i1 != 1 || j1 != 0) return false;  // no pattern can start elsewhere
    const int i2 = core.I[1];
    const int j2 = core.J[1];
    if (i2 >= 3 || j2 >= 2) return swap_first();

    if (i2 == 2 && j2 == 1) {
        Path& p1 = core.paths[0];
        const Path& p2 = core.paths[1];
        if (fr.is_direct(p1)) {
            if (fr.is_hook(p2, 2)) {
                // pair with the pattern family: take the largest l with
                // components 2..l all hooks, and break the run there
                std::size_t l = 2;
                while (l + 1 <= k && fr.is_hook(core.paths[l], static_cast<int>(l + 1))) ++l;
                p1 = fr.make_hook(1);
                core.paths[l - 1] = fr.make_antihook(static_cast<int>(l));
                return true;
            }
            if (!fr.is_antihook(p2, 2))
                throw std::logic_error("involution: second component is neither of the two "
                                       "possible connecting paths");
            p1 = fr.make_via_q1(ArcTag::left);
            return true;
        }
        if (fr.is_via_q1(p1, ArcTag::left)) {
            if (!fr.is_antihook(p2, 2))
                throw std::logic_error("involution: family intersects at the second column");
            p1 = fr.make_direct();
            return true;
        }
        if (fr.is_hook(p1, 1)) {
            for (std::size_t m = 2; m <= k; ++m) {
                if (fr.is_hook(core.paths[m - 1], static_cast<int>(m))) continue;
                if (!fr.is_antihook(core.paths[m - 1], static_cast<int>(m))) break;
                const std::size_t l = m;
                // the component after the break cannot extend the hook
                // run, otherwise the original family was intersecting
                if (l < k && fr.is_hook(core.paths[l], static_cast<int>(l + 1)))
                    throw std::logic_error("involution: hook run continues past the antihook");
                p1 = fr.make_direct();
                core.paths[l - 1] = fr.make_hook(static_cast<int>(l));
                return true;
            }
            return false;
        }
        return false;  // the right-tagged path and longer detours are fixed
    }
    throw std::logic_error("involution: unreachable selection for the second component");
}

bool is_rail_component(const Network& net, const Path& p) {
    if (p.arcs.size() != 1) return false;
    const Arc& a = net.arc(p.arcs[0]);
    const VertexId t = net.vertex(a.tail).id;
    const VertexId h = net.vertex(a.head).id;
    return t.kind == VertexKind::P && h.kind == VertexKind::P && t.row == h.row &&
           h.level == t.level + 1;
}

CoreView core_of_piece(const BlockFrame& fr, const PathFamily& piece) {
    CoreView raw;
    for (std::size_t c = 0; c < piece.paths.size(); ++c) {
        const Path& p = piece.paths[c];
        if (is_rail_component(*fr.net, p)) continue;
        const VertexId src = fr.net->vertex(p.source).id;
        const VertexId dst = fr.net->vertex(path_target(*fr.net, p)).id;
        const auto si = fr.source_logical(src);
        const auto sj = fr.sink_logical(dst);
        if (!si || !sj)
            throw std::invalid_argument("segment piece endpoint " + to_string(src) + " -> " +
                                        to_string(dst) + " is not a block port");
        raw.paths.push_back(p);
        raw.I.push_back(*si);
        raw.J.push_back(*sj);
        raw.positions.push_back(c);
    }
    std::vector<std::size_t> order(raw.paths.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return raw.I[a] < raw.I[b]; });
    CoreView core;
    for (const std::size_t idx : order) {
        core.paths.push_back(std::move(raw.paths[idx]));
        core.I.push_back(raw.I[idx]);
        core.J.push_back(raw.J[idx]);
        core.positions.push_back(raw.positions[idx]);
    }
    for (std::size_t c = 1; c < core.I.size(); ++c)
        if (core.I[c] <= core.I[c - 1] || core.J[c] <= core.J[c - 1])
            throw std::invalid_argument("segment piece components are not strictly ordered");
    return core;
}

VertexId mirror_id(const VertexId& id) {
    switch (id.kind) {
        case VertexKind::P: return {VertexKind::PBar, id.level, id.row};
        case VertexKind::Q: return {VertexKind::QBar, id.level, id.row};
        case VertexKind::PBar: return {VertexKind::P, id.level, id.row};
        case VertexKind::QBar: return {VertexKind::Q, id.level, id.row};
    }
    throw std::logic_error("mirror_id: bad kind");
}

/// Image of a piece under the left-right symmetry of the glued network:
/// each arc maps to its mirror arc and the arc order reverses.
PathFamily reflect_piece(const Network& net, const PathFamily& piece) {
    PathFamily out;
    for (const Path& p : piece.paths) {
        Path r;
        r.source = net.vertex_index(mirror_id(net.vertex(path_target(net, p)).id));
        for (auto it = p.arcs.rbegin(); it != p.arcs.rend(); ++it) {
            const Arc& a = net.arc(*it);
            r.arcs.push_back(net.arc_index(mirror_id(net.vertex(a.head).id),
                                           mirror_id(net.vertex(a.tail).id), a.tag));
        }
        out.paths.push_back(std::move(r));
    }
    return out;
}

void validate_lb_selection(const Network& net, const PathFamily& fam, const LbContext& ctx,
                           const BlockFrame& fr) {
    if (fam.paths.size() != ctx.I.size() || ctx.I.size() != ctx.J.size())
        throw std::invalid_argument("family size does not match the row/column selection");
    for (std::size_t c = 0; c < ctx.I.size(); ++c) {
        if (c > 0 && (ctx.I[c] <= ctx.I[c - 1] || ctx.J[c] <= ctx.J[c - 1]))
            throw std::invalid_argument("row/column selections must be strictly ascending");
        if (ctx.I[c] > ctx.n + 1 || ctx.J[c] > ctx.n + 1)
            throw std::invalid_argument("row/column selection out of range");
        const VertexId src = net.vertex(fam.paths[c].source).id;
        const VertexId dst = net.vertex(path_target(net, fam.paths[c])).id;
        if (src != fr.pv(static_cast<int>(ctx.I[c])) ||
            dst != fr.ppv(static_cast<int>(ctx.J[c])))
            throw std::invalid_argument("family endpoints do not match the selection");
    }
}

CoreView flat_core(const PathFamily& fam, const LbContext& ctx) {
    CoreView core;
    core.paths = fam.paths;
    for (std::size_t c = 0; c < ctx.I.size(); ++c) {
        core.I.push_back(static_cast<int>(ctx.I[c]));
        core.J.push_back(static_cast<int>(ctx.J[c]));
        core.positions.push_back(c);
    }
    return core;
}

struct ScanHit {
    PropertyTag tag;
    std::size_t position = 0;
    std::size_t stage = 0;
    bool mirrored = false;
};

std::optional<ScanHit> first_moving_piece(const SegmentedNetwork& seg, const SegmentedFamily& sf) {
    for (std::size_t i = 1; i <= seg.order; ++i) {
        const std::size_t pos = seg.forward_position(i);
        const PropertyTag tag = classify_segment(seg, sf.pieces[pos], i, false);
        if (tag.kind != PropertyKind::none) return ScanHit{tag, pos, i, false};
    }
    for (std::size_t i = seg.order; i >= 1; --i) {
        const std::size_t pos = seg.mirrored_position(i);
        const PropertyTag tag = classify_segment(seg, sf.pieces[pos], i, true);
        if (tag.kind != PropertyKind::none) return ScanHit{tag, pos, i, true};
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(const PropertyTag& tag) {
    if (tag.kind == PropertyKind::none) return "None";
    std::string out = "P";
    out += static_cast<char>('0' + static_cast<int>(tag.kind));
    if (tag.segment != 0) {
        if (tag.mirrored) out += "bar";
        out += "(" + std::to_string(tag.segment) + ")";
    }
    return out;
}

PropertyTag classify_lb(const Network& net, const PathFamily& fam, const LbContext& ctx) {
    const BlockFrame fr{&net, false, 1};
    validate_lb_selection(net, fam, ctx, fr);
    return PropertyTag{classify_core(fr, fam.paths), 0, false};
}

PathFamily phi_lb(const Network& net, const PathFamily& fam, const LbContext& ctx) {
    const BlockFrame fr{&net, false, 1};
    validate_lb_selection(net, fam, ctx, fr);
    CoreView core = flat_core(fam, ctx);
    if (!phi_core(fr, core)) return fam;
    PathFamily out;
    out.paths = std::move(core.paths);
    if (!vertex_disjoint(net, out))
        throw std::logic_error("involution image is not vertex-disjoint");
    return out;
}

SegmentedFamily decompose(const SegmentedNetwork& seg, const PathFamily& fam) {
    const Network& net = seg.ported.net;
    const std::size_t nseg = seg.segments.size();
    SegmentedFamily sf;
    sf.flat = fam;
    sf.pieces.assign(nseg, PathFamily{});
    for (PathFamily& piece : sf.pieces) piece.paths.resize(fam.paths.size());
    for (std::size_t c = 0; c < fam.paths.size(); ++c) {
        const Path& p = fam.paths[c];
        std::size_t cur = 0;
        sf.pieces[0].paths[c].source = p.source;
        for (const int aid : p.arcs) {
            const std::size_t pos = static_cast<std::size_t>(seg.arc_segment[
                static_cast<std::size_t>(aid)]);
            if (pos < cur)
                throw std::invalid_argument("decompose: component crosses segments out of order");
            if (pos > cur) {
                cur = pos;
                sf.pieces[cur].paths[c].source = net.arc(aid).tail;
            }
            sf.pieces[cur].paths[c].arcs.push_back(aid);
        }
        for (std::size_t s = 0; s < nseg; ++s)
            if (sf.pieces[s].paths[c].arcs.empty())
                throw std::invalid_argument("decompose: component misses a segment");
    }
    return sf;
}

PathFamily recompose(const SegmentedNetwork& seg, const SegmentedFamily& sf) {
    const Network& net = seg.ported.net;
    if (sf.pieces.size() != seg.segments.size())
        throw std::invalid_argument("recompose: piece count mismatch");
    const std::size_t k = sf.pieces.front().paths.size();
    for (const PathFamily& piece : sf.pieces)
        if (piece.paths.size() != k) throw std::invalid_argument("recompose: ragged pieces");
    PathFamily out;
    for (std::size_t c = 0; c < k; ++c) {
        Path full;
        full.source = sf.pieces.front().paths[c].source;
        int cursor = full.source;
        for (const PathFamily& piece : sf.pieces) {
            const Path& part = piece.paths[c];
            if (part.source != cursor)
                throw std::invalid_argument("recompose: pieces do not chain at the boundary");
            full.arcs.insert(full.arcs.end(), part.arcs.begin(), part.arcs.end());
            cursor = path_target(net, part);
        }
        out.paths.push_back(std::move(full));
    }
    return out;
}

PropertyTag classify_segment(const SegmentedNetwork& seg, const PathFamily& piece,
                             std::size_t stage, bool mirrored) {
    if (stage < 1 || stage > seg.order) throw std::invalid_argument("bad segment stage");
    const Network& net = seg.ported.net;
    const BlockFrame fr{&net, true, static_cast<int>(stage)};
    const PathFamily forward = mirrored ? reflect_piece(net, piece) : piece;
    const CoreView core = core_of_piece(fr, forward);
    return PropertyTag{classify_core(fr, core.paths), stage, mirrored};
}

PathFamily phi_segment(const SegmentedNetwork& seg, const PathFamily& piece, std::size_t stage,
                       bool mirrored) {
    if (stage < 1 || stage > seg.order) throw std::invalid_argument("bad segment stage");
    const Network& net = seg.ported.net;
    const BlockFrame fr{&net, true, static_cast<int>(stage)};
    PathFamily forward = mirrored ? reflect_piece(net, piece) : piece;
    CoreView core = core_of_piece(fr, forward);
    if (!phi_core(fr, core)) return piece;
    for (std::size_t idx = 0; idx < core.positions.size(); ++idx)
        forward.paths[core.positions[idx]] = core.paths[idx];
    return mirrored ? reflect_piece(net, forward) : forward;
}

PropertyTag classify_h(const SegmentedNetwork& seg, const PathFamily& fam) {
    const SegmentedFamily sf = decompose(seg, fam);
    const auto hit = first_moving_piece(seg, sf);
    return hit ? hit->tag : PropertyTag{};
}

PathFamily phi_h(const SegmentedNetwork& seg, const PathFamily& fam) {
    SegmentedFamily sf = decompose(seg, fam);
    const auto hit = first_moving_piece(seg, sf);
    if (!hit) return fam;
    PathFamily moved = phi_segment(seg, sf.pieces[hit->position], hit->stage, hit->mirrored);
    if (moved == sf.pieces[hit->position])
        throw std::logic_error("a tagged segment piece must move under the involution");
    sf.pieces[hit->position] = std::move(moved);
    PathFamily out = recompose(seg, sf);
    if (!vertex_disjoint(seg.ported.net, out))
        throw std::logic_error("involution image is not vertex-disjoint");
    return out;
}

std::vector<PathFamily> fixed_points(
    const std::vector<PathFamily>& families,
    const std::function<PropertyTag(const PathFamily&)>& classifier) {
    std::vector<PathFamily> out;
    for (const PathFamily& fam : families)
        if (classifier(fam).kind == PropertyKind::none) out.push_back(fam);
    return out;
}

}  // namespace tpv
