#include "tpverify/netgraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "tpverify/errors.hpp"

namespace tpv {

std::string to_string(const VertexId& id) {
    std::string s;
    switch (id.kind) {
        case VertexKind::P: s = "P"; break;
        case VertexKind::Q: s = "Q"; break;
        case VertexKind::PBar: s = "Pb"; break;
        case VertexKind::QBar: s = "Qb"; break;
    }
    s += "(" + std::to_string(id.level) + ")" + std::to_string(id.row);
    return s;
}

std::optional<VertexId> parse_vertex_id(const std::string& text) {
    VertexId id;
    std::size_t pos = 0;
    if (text.starts_with("Pb")) { id.kind = VertexKind::PBar; pos = 2; }
    else if (text.starts_with("Qb")) { id.kind = VertexKind::QBar; pos = 2; }
    else if (text.starts_with("P")) { id.kind = VertexKind::P; pos = 1; }
    else if (text.starts_with("Q")) { id.kind = VertexKind::Q; pos = 1; }
    else return std::nullopt;
    if (pos >= text.size() || text[pos] != '(') return std::nullopt;
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos || close + 1 >= text.size()) return std::nullopt;
    auto parse_int = [](std::string_view sv, int& out) {
        auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
        return ec == std::errc{} && p == sv.data() + sv.size();
    };
    if (!parse_int(std::string_view(text).substr(pos + 1, close - pos - 1), id.level))
        return std::nullopt;
    if (!parse_int(std::string_view(text).substr(close + 1), id.row)) return std::nullopt;
    return id;
}

void NetworkBuilder::add_vertex(VertexId id, int x, int y) {
    add_vertex(id, tpv::to_string(id), x, y);
}

void NetworkBuilder::add_vertex(VertexId id, std::string label, int x, int y) {
    if (index_.contains(id))
        throw std::invalid_argument("NetworkBuilder: duplicate vertex " + tpv::to_string(id));
    index_.emplace(id, static_cast<int>(vertices_.size()));
    vertices_.push_back(Vertex{id, std::move(label), x, y});
}

int NetworkBuilder::add_arc(VertexId tail, VertexId head, QPoly weight, ArcTag tag) {
    auto t = index_.find(tail);
    auto h = index_.find(head);
    if (t == index_.end() || h == index_.end())
        throw std::invalid_argument("NetworkBuilder: arc endpoint not a vertex: " +
                                    tpv::to_string(t == index_.end() ? tail : head));
    arcs_.push_back(Arc{t->second, h->second, std::move(weight), tag});
    return static_cast<int>(arcs_.size()) - 1;
}

Network NetworkBuilder::finish() {
    Network net;
    net.vertices_ = std::move(vertices_);
    net.arcs_ = std::move(arcs_);
    net.index_ = std::move(index_);

    const std::size_t nv = net.vertices_.size();
    net.out_.assign(nv, {});
    net.in_.assign(nv, {});
    for (std::size_t a = 0; a < net.arcs_.size(); ++a) {
        net.out_[static_cast<std::size_t>(net.arcs_[a].tail)].push_back(static_cast<int>(a));
        net.in_[static_cast<std::size_t>(net.arcs_[a].head)].push_back(static_cast<int>(a));
    }

    // Parallel arcs between an ordered pair: at most two, tagged
    // left/right to stay distinguishable.
    std::map<std::pair<int, int>, std::vector<ArcTag>> parallel;
    for (const Arc& a : net.arcs_) parallel[{a.tail, a.head}].push_back(a.tag);
    for (const auto& [pair, tags] : parallel) {
        if (tags.size() > 2)
            throw std::invalid_argument("network: more than two parallel arcs between " +
                                        net.vertices_[static_cast<std::size_t>(pair.first)].label +
                                        " and " +
                                        net.vertices_[static_cast<std::size_t>(pair.second)].label);
        if (tags.size() == 2 &&
            !((tags[0] == ArcTag::left && tags[1] == ArcTag::right) ||
              (tags[0] == ArcTag::right && tags[1] == ArcTag::left)))
            throw std::invalid_argument("network: parallel arcs must carry distinct left/right tags");
    }

    // Kahn topological sort; leftovers mean a cycle.
    std::vector<int> indeg(nv, 0);
    for (const Arc& a : net.arcs_) ++indeg[static_cast<std::size_t>(a.head)];
    std::deque<int> ready;
    for (std::size_t v = 0; v < nv; ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    net.topo_order_.reserve(nv);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        net.topo_order_.push_back(v);
        for (int a : net.out_[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(net.arcs_[static_cast<std::size_t>(a)].head)] == 0)
                ready.push_back(net.arcs_[static_cast<std::size_t>(a)].head);
    }
    if (net.topo_order_.size() != nv)
        throw std::invalid_argument("network: directed cycle detected");
    return net;
}

std::optional<int> Network::find_vertex(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Network::vertex_index(VertexId id) const {
    auto idx = find_vertex(id);
    if (!idx) throw std::invalid_argument("network: no vertex " + tpv::to_string(id));
    return *idx;
}

int Network::arc_index(VertexId tail, VertexId head, ArcTag tag) const {
    int t = vertex_index(tail);
    int h = vertex_index(head);
    for (int a : out_[static_cast<std::size_t>(t)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.head == h && arc.tag == tag) return a;
    }
    throw std::invalid_argument("network: no arc " + tpv::to_string(tail) + " -> " +
                                tpv::to_string(head));
}

std::span<const int> Network::out_arcs(int vertex_idx) const {
    return out_[static_cast<std::size_t>(vertex_idx)];
}

std::span<const int> Network::in_arcs(int vertex_idx) const {
    return in_[static_cast<std::size_t>(vertex_idx)];
}

bool operator==(const Network& lhs, const Network& rhs) {
    return lhs.vertices_ == rhs.vertices_ && lhs.arcs_ == rhs.arcs_;
}

int path_target(const Network& net, const Path& p) {
    if (p.arcs.empty()) return p.source;
    return net.arc(p.arcs.back()).head;
}

QPoly path_weight(const Network& net, const Path& p) {
    QPoly w(1L);
    for (int a : p.arcs) w = w * net.arc(a).weight;
    return w;
}

QPoly family_weight(const Network& net, const PathFamily& fam) {
    QPoly w(1L);
    for (const Path& p : fam.paths) w = w * path_weight(net, p);
    return w;
}

namespace {

/// Occupancy bitset over vertex indices (enumeration-scale nets only).
struct VertexSet {
    std::array<std::uint64_t, 4> bits{};

    void insert(int v) { bits[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63); }
    bool overlaps(const VertexSet& other) const {
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & other.bits[i]) return true;
        return false;
    }
    void merge(const VertexSet& other) {
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] |= other.bits[i];
    }
};

constexpr std::size_t kMaxEnumVertices = 256;

void require_enumerable(const Network& net) {
    if (net.vertex_count() > kMaxEnumVertices)
        throw std::invalid_argument("family enumeration supports at most 256 vertices");
}

VertexSet path_vertices(const Network& net, const Path& p) {
    VertexSet s;
    s.insert(p.source);
    for (int a : p.arcs) s.insert(net.arc(a).head);
    return s;
}

struct Budget {
    std::size_t remaining;
    void spend(const char* what) {
        if (remaining == 0)
            throw BudgetExceeded(std::string("enumeration budget exhausted during ") + what +
                                 "; rerun with a larger budget or smaller order");
        --remaining;
    }
};

/// Vertices from which `target` is reachable (used to prune dead DFS branches).
std::vector<char> reaches_target(const Network& net, int target) {
    std::vector<char> ok(net.vertex_count(), 0);
    ok[static_cast<std::size_t>(target)] = 1;
    auto topo = net.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int a : net.out_arcs(*it))
            if (ok[static_cast<std::size_t>(net.arc(a).head)]) {
                ok[static_cast<std::size_t>(*it)] = 1;
                break;
            }
    return ok;
}

void dfs_paths(const Network& net, int at, int target, const std::vector<char>& reaches,
               Path& partial, Budget& budget, const std::function<bool(const Path&)>& emit,
               bool& stop) {
    budget.spend("path enumeration");
    if (at == target) {
        // Zero-length convention: reaching the target ends the path; in an
        // acyclic network no continuation could return here.
        if (!emit(partial)) stop = true;
        return;
    }
    for (int a : net.out_arcs(at)) {
        if (!reaches[static_cast<std::size_t>(net.arc(a).head)]) continue;
        partial.arcs.push_back(a);
        dfs_paths(net, net.arc(a).head, target, reaches, partial, budget, emit, stop);
        partial.arcs.pop_back();
        if (stop) return;
    }
}

bool vertex_lists_ok(std::span<const VertexId> U, std::span<const VertexId> V) {
    return U.size() == V.size();
}

/// Core product DFS over components; cb returns false to stop early.
void dfs_families(const Network& net, std::span<const VertexId> U, std::span<const VertexId> V,
                  std::size_t budget_units, const std::function<bool(const PathFamily&)>& cb) {
    if (!vertex_lists_ok(U, V))
        throw std::invalid_argument("family enumeration: source and sink lists differ in size");
    require_enumerable(net);
    const std::size_t k = U.size();
    Budget budget{budget_units};

    // Pre-enumerate each component's candidate paths with their
    // occupancy sets; candidates are in canonical (lexicographic) order.
    std::vector<std::vector<Path>> cand(k);
    std::vector<std::vector<VertexSet>> cand_sets(k);
    for (std::size_t i = 0; i < k; ++i) {
        int u = net.vertex_index(U[i]);
        int v = net.vertex_index(V[i]);
        std::vector<char> reaches = reaches_target(net, v);
        Path partial{u, {}};
        bool stop = false;
        dfs_paths(net, u, v, reaches, partial, budget,
                  [&](const Path& p) {
                      cand[i].push_back(p);
                      cand_sets[i].push_back(path_vertices(net, p));
                      return true;
                  },
                  stop);
    }

    PathFamily fam;
    fam.paths.resize(k);
    std::vector<VertexSet> occupied(k + 1);
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            if (!cb(fam)) stop = true;
            return;
        }
        for (std::size_t c = 0; c < cand[i].size() && !stop; ++c) {
            budget.spend("family extension");
            if (occupied[i].overlaps(cand_sets[i][c])) continue;
            fam.paths[i] = cand[i][c];
            occupied[i + 1] = occupied[i];
            occupied[i + 1].merge(cand_sets[i][c]);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

bool vertex_disjoint(const Network& net, const PathFamily& fam) {
    require_enumerable(net);
    VertexSet seen;
    for (const Path& p : fam.paths) {
        VertexSet s = path_vertices(net, p);
        if (s.overlaps(seen)) return false;
        seen.merge(s);
    }
    return true;
}

std::size_t default_budget() {
    if (const char* env = std::getenv("TPVERIFY_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBudget;
}

std::vector<Path> enumerate_paths(const Network& net, VertexId u, VertexId v,
                                  std::size_t budget_units) {
    int ui = net.vertex_index(u);
    int vi = net.vertex_index(v);
    std::vector<Path> out;
    std::vector<char> reaches = reaches_target(net, vi);
    Path partial{ui, {}};
    Budget budget{budget_units};
    bool stop = false;
    dfs_paths(net, ui, vi, reaches, partial, budget,
              [&](const Path& p) {
                  out.push_back(p);
                  return true;
              },
              stop);
    return out;
}

QPoly gf(const Network& net, VertexId u, VertexId v) {
    int ui = net.vertex_index(u);
    int vi = net.vertex_index(v);
    std::vector<QPoly> g(net.vertex_count());
    g[static_cast<std::size_t>(vi)] = QPoly(1L);
    auto topo = net.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int x = *it;
        if (x == vi) continue;
        QPoly acc;
        for (int a : net.out_arcs(x)) {
            const Arc& arc = net.arc(a);
            const QPoly& reach = g[static_cast<std::size_t>(arc.head)];
            if (!reach.is_zero() && !arc.weight.is_zero()) acc += arc.weight * reach;
        }
        g[static_cast<std::size_t>(x)] = std::move(acc);
    }
    return g[static_cast<std::size_t>(ui)];
}

PolyMatrix path_matrix(const Network& net, std::span<const VertexId> U,
                       std::span<const VertexId> V) {
    PolyMatrix m(U.size(), V.size());
    for (std::size_t j = 0; j < V.size(); ++j) {
        // One backward pass per sink, shared across all sources.
        int vi = net.vertex_index(V[j]);
        std::vector<QPoly> g(net.vertex_count());
        g[static_cast<std::size_t>(vi)] = QPoly(1L);
        auto topo = net.topo_order();
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            int x = *it;
            if (x == vi) continue;
            QPoly acc;
            for (int a : net.out_arcs(x)) {
                const Arc& arc = net.arc(a);
                const QPoly& reach = g[static_cast<std::size_t>(arc.head)];
                if (!reach.is_zero() && !arc.weight.is_zero()) acc += arc.weight * reach;
            }
            g[static_cast<std::size_t>(x)] = std::move(acc);
        }
        for (std::size_t i = 0; i < U.size(); ++i)
            m.at(i, j) = g[static_cast<std::size_t>(net.vertex_index(U[i]))];
    }
    return m;
}

void visit_families(const Network& net, std::span<const VertexId> U,
                    std::span<const VertexId> V,
                    const std::function<void(const PathFamily&)>& visitor,
                    std::size_t budget) {
    dfs_families(net, U, V, budget, [&](const PathFamily& fam) {
        visitor(fam);
        return true;
    });
}

std::vector<PathFamily> enumerate_families(const Network& net, std::span<const VertexId> U,
                                           std::span<const VertexId> V, std::size_t budget) {
    std::vector<PathFamily> out;
    visit_families(net, U, V, [&](const PathFamily& fam) { out.push_back(fam); }, budget);
    return out;
}

bool families_exist(const Network& net, std::span<const VertexId> U,
                    std::span<const VertexId> V, std::size_t budget) {
    bool found = false;
    dfs_families(net, U, V, budget, [&](const PathFamily&) {
        found = true;
        return false;
    });
    return found;
}

QPoly gf_families(const Network& net, std::span<const PathFamily> families) {
    QPoly acc;
    for (const PathFamily& fam : families) acc += family_weight(net, fam);
    return acc;
}

LgvResult lgv_check(const Network& net, std::span<const VertexId> U,
                    std::span<const VertexId> V, std::size_t budget, std::size_t det_cap) {
    LgvResult r;
    r.lhs = det(path_matrix(net, U, V), det_cap);
    QPoly acc;
    visit_families(net, U, V, [&](const PathFamily& fam) { acc += family_weight(net, fam); },
                   budget);
    r.rhs = std::move(acc);
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace tpv
