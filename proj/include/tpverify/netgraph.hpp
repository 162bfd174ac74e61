#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tpverify/polymat.hpp"
#include "tpverify/qpoly.hpp"

namespace tpv {

/// Vertex identity in the layered networks: a column kind (plain or
/// mirrored), a level (which copy of the column pattern), and a row.
enum class VertexKind : std::uint8_t { P, Q, PBar, QBar };

struct VertexId {
    VertexKind kind = VertexKind::P;
    int level = 0;
    int row = 0;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Canonical string form, e.g. "P(0)1", "Qb(2)3".
std::string to_string(const VertexId& id);
std::optional<VertexId> parse_vertex_id(const std::string& text);

/// Disambiguates parallel arcs between the same ordered vertex pair.
enum class ArcTag : std::uint8_t { none, left, right };

struct Vertex {
    VertexId id;
    std::string label;
    int x = 0;
    int y = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arc {
    int tail = -1;  // vertex index
    int head = -1;  // vertex index
    QPoly weight;
    ArcTag tag = ArcTag::none;

    friend bool operator==(const Arc&, const Arc&) = default;
};

class Network;

/// Accumulates vertices and arcs, then validates and freezes them into
/// an immutable Network.
class NetworkBuilder {
public:
    void add_vertex(VertexId id, int x, int y);
    void add_vertex(VertexId id, std::string label, int x, int y);
    /// Arc ids are assigned in insertion order.
    int add_arc(VertexId tail, VertexId head, QPoly weight, ArcTag tag = ArcTag::none);

    /// Validates acyclicity and the parallel-arc/tag rules.
    Network finish();

private:
    friend class Network;
    std::vector<Vertex> vertices_;
    std::vector<Arc> arcs_;
    std::map<VertexId, int> index_;
};

/// Immutable weighted acyclic digraph.  Arc ids are dense indices fixed
/// at construction; enumeration orders derive from them, so identical
/// construction sequences give identical canonical orders.
class Network {
public:
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    const Vertex& vertex(int idx) const { return vertices_[static_cast<std::size_t>(idx)]; }
    const Arc& arc(int idx) const { return arcs_[static_cast<std::size_t>(idx)]; }

    std::optional<int> find_vertex(VertexId id) const;
    /// Like find_vertex but throws when absent.
    int vertex_index(VertexId id) const;

    /// Arc id of the unique tail->head arc with the given tag.
    int arc_index(VertexId tail, VertexId head, ArcTag tag = ArcTag::none) const;

    std::span<const int> out_arcs(int vertex_idx) const;
    std::span<const int> in_arcs(int vertex_idx) const;
    std::span<const int> topo_order() const { return topo_order_; }

    friend bool operator==(const Network& lhs, const Network& rhs);

private:
    friend class NetworkBuilder;
    std::vector<Vertex> vertices_;
    std::vector<Arc> arcs_;
    std::map<VertexId, int> index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<int> topo_order_;
};

/// Directed path, stored as the source vertex index plus the arc-id
/// sequence (empty for the zero-length path at its source).
struct Path {
    int source = -1;
    std::vector<int> arcs;

    friend bool operator==(const Path&, const Path&) = default;
};

int path_target(const Network& net, const Path& p);
QPoly path_weight(const Network& net, const Path& p);

/// Ordered tuple of paths (component i runs from the i-th source to the
/// i-th sink of whatever selection produced it).
struct PathFamily {
    std::vector<Path> paths;

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

QPoly family_weight(const Network& net, const PathFamily& fam);

/// True when no two paths of the family share a vertex.
bool vertex_disjoint(const Network& net, const PathFamily& fam);

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Work budget picked up from the environment variable TPVERIFY_BUDGET
/// when set, kDefaultBudget otherwise.
std::size_t default_budget();

/// All directed u -> v paths in lexicographic arc-id order.  When
/// u == v the result is exactly the zero-length path (weight 1).
std::vector<Path> enumerate_paths(const Network& net, VertexId u, VertexId v,
                                  std::size_t budget = kDefaultBudget);

/// Generating function of the u -> v paths (sum of path weights),
/// computed by dynamic programming over the topological order.
QPoly gf(const Network& net, VertexId u, VertexId v);

/// Matrix of gf values: entry (i, j) = gf(U[i], V[j]).
PolyMatrix path_matrix(const Network& net, std::span<const VertexId> U,
                       std::span<const VertexId> V);

/// Streams every vertex-disjoint family (p_0, ..., p_{k-1}) with p_i
/// running U[i] -> V[i], in lexicographic order by component paths.
/// Each candidate component extension costs one unit of budget;
/// exhausting the budget throws BudgetExceeded.
void visit_families(const Network& net, std::span<const VertexId> U,
                    std::span<const VertexId> V,
                    const std::function<void(const PathFamily&)>& visitor,
                    std::size_t budget = kDefaultBudget);

std::vector<PathFamily> enumerate_families(const Network& net, std::span<const VertexId> U,
                                           std::span<const VertexId> V,
                                           std::size_t budget = kDefaultBudget);

/// True when at least one vertex-disjoint family exists.
bool families_exist(const Network& net, std::span<const VertexId> U,
                    std::span<const VertexId> V, std::size_t budget = kDefaultBudget);

QPoly gf_families(const Network& net, std::span<const PathFamily> families);

struct LgvResult {
    QPoly lhs;  // determinant of the path matrix
    QPoly rhs;  // generating function of the vertex-disjoint families
    bool equal = false;
};

LgvResult lgv_check(const Network& net, std::span<const VertexId> U,
                    std::span<const VertexId> V, std::size_t budget = kDefaultBudget,
                    std::size_t det_cap = kDefaultDetCap);

}  // namespace tpv
