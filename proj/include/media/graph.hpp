#pragma once

// Undirected graphs, graph distance, bipartiteness, semicubes, Winkler's
// relation Theta, partial-cube recognition, isometric hypercube embedding,
// edge-pair classification and the arc relation L.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "media/error.hpp"

namespace media {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

/// An edge with its endpoints in canonical (sorted-label) order.
struct Edge {
    Vertex first;
    Vertex second;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// An ordered pair of adjacent vertices.
struct Arc {
    Vertex tail;
    Vertex head;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Token-pair label of an edge: `forward` moves first -> second.
struct EdgeLabel {
    std::string forward;
    std::string backward;
    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Simple undirected graph with unique vertex labels.
///
/// Edges are stored in canonical order: each edge's endpoints are ordered by
/// vertex label, and edges are sorted lexicographically by those endpoint
/// ranks. Edge indices therefore double as canonical edge ranks.
class Graph {
public:
    Graph(std::vector<std::string> vertex_labels, const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::vector<std::optional<EdgeLabel>> edge_labels = {});

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find_vertex(const std::string& label) const;
    Vertex vertex(const std::string& label) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::optional<EdgeLabel>& edge_label(EdgeIndex e) const { return edge_labels_.at(e); }
    std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;
    EdgeIndex edge_index(Vertex a, Vertex b) const;  // throws on non-edges
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    /// Position of v in the sorted-label order.
    std::size_t rank(Vertex v) const { return rank_.at(v); }
    /// Vertices sorted by label.
    const std::vector<Vertex>& canonical_order() const { return order_; }

    /// Every arc, two per edge, ordered by edge then (first, second) before (second, first).
    std::vector<Arc> arcs() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> rank_;
    std::vector<Vertex> order_;
    std::vector<Edge> edges_;
    std::vector<std::optional<EdgeLabel>> edge_labels_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> incident_;
};

/// Thrown when a connected graph was required.
class DisconnectedGraph : public InputError {
public:
    DisconnectedGraph(Vertex a, Vertex b, const std::string& what) : InputError(what), from(a), to(b) {}
    Vertex from;
    Vertex to;
};

/// All-pairs shortest-path distances.
class DistanceTable {
public:
    static constexpr std::uint32_t unreachable = UINT32_MAX;

    DistanceTable() = default;
    explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, unreachable) {}

    std::size_t size() const { return n_; }
    std::uint32_t operator()(Vertex a, Vertex b) const { return d_[a * n_ + b]; }
    std::uint32_t& at(Vertex a, Vertex b) { return d_[a * n_ + b]; }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

/// BFS per source; entries are DistanceTable::unreachable across components.
DistanceTable bfs_distances(const Graph& g);
/// Exact distances; throws DisconnectedGraph naming the first unreachable pair.
DistanceTable all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

struct BipartiteCheck {
    bool bipartite;
    std::vector<Vertex> odd_cycle;  // closed by its last -> first edge
};

/// BFS 2-colouring; on failure returns an odd cycle.
BipartiteCheck is_bipartite(const Graph& g);
/// Distance criterion for connected graphs: no edge is equidistant from any vertex.
bool is_bipartite_by_distance(const Graph& g, const DistanceTable& d);

/// Vertices strictly closer to s than to t; {s, t} must be an edge.
std::vector<Vertex> semicube(const Graph& g, const DistanceTable& d, Vertex s, Vertex t);
std::vector<Vertex> semicube(const Graph& g, Vertex s, Vertex t);

/// Winkler's relation on two edges given as oriented pairs.
bool theta(const Graph& g, const DistanceTable& d, Arc e1, Arc e2);

/// Partition of the edge set into Theta classes, ordered by smallest edge.
struct ThetaPartition {
    std::vector<std::size_t> class_of_edge;
    std::vector<std::vector<EdgeIndex>> classes;
    std::size_t class_count() const { return classes.size(); }
};

/// e1 R e2, e2 R e3, but not e1 R e3.
template <class Item>
struct TransitivityWitness {
    Item first;
    Item middle;
    Item last;
};

using ThetaResult = std::variant<ThetaPartition, TransitivityWitness<EdgeIndex>>;

/// Theta classes of a connected bipartite graph (throws InputError otherwise),
/// or a witness that Theta is not transitive.
ThetaResult theta_classes(const Graph& g, const DistanceTable& d);
ThetaResult theta_classes(const Graph& g);

struct NotConnectedWitness {
    Vertex from;
    Vertex to;
};
struct OddCycleWitness {
    std::vector<Vertex> cycle;
};
struct ThetaWitness {
    TransitivityWitness<EdgeIndex> edges;
};
/// w lies on a shortest a-b path with a, b in semicube(s, t) but w outside.
struct NonConvexSemicubeWitness {
    Arc edge;
    Vertex a;
    Vertex b;
    Vertex outside;
};
struct ArcRelationWitness {
    TransitivityWitness<Arc> arcs;
};

using GraphWitness = std::variant<NotConnectedWitness, OddCycleWitness, ThetaWitness,
                                  NonConvexSemicubeWitness, ArcRelationWitness>;

struct PartialCubeCheck {
    bool partial_cube;
    bool by_theta;      // connected, bipartite, Theta transitive
    bool by_convexity;  // connected, bipartite, every semicube convex
    std::optional<GraphWitness> witness;
};

PartialCubeCheck partial_cube_by_theta(const Graph& g);
PartialCubeCheck partial_cube_by_convexity(const Graph& g);
/// Runs both methods; throws std::logic_error if they disagree.
PartialCubeCheck is_partial_cube(const Graph& g);

/// Vertex v maps to the set of Theta-class indices crossed on any shortest
/// path from the base vertex.
struct HypercubeEmbedding {
    Vertex base;
    ThetaPartition classes;
    std::vector<std::vector<std::size_t>> coordinates;  // sorted class indices
    std::size_t dimension() const { return classes.class_count(); }
};

/// Throws InputError when g is not a partial cube; verifies isometry before
/// returning (std::logic_error on failure).
HypercubeEmbedding embed_hypercube(const Graph& g);
HypercubeEmbedding embed_hypercube(const Graph& g, const DistanceTable& d);

/// Which of the six mutually exclusive configurations two distinct edges
/// (s,t), (p,q) of a connected bipartite graph form. Cases 5 and 6 are the
/// Theta-related ones.
int classify_edge_pair(const Graph& g, const DistanceTable& d, Arc st, Arc pq);

/// (s,t) L (p,q) <=> d(s,p) = d(t,q) = d(t,p) - 1 = d(s,q) - 1.
bool arc_relation(const DistanceTable& d, Arc st, Arc pq);

struct MediaticCheck {
    bool mediatic;
    std::optional<GraphWitness> witness;
};

/// Connected, bipartite, and L transitive on arcs.
MediaticCheck is_mediatic(const Graph& g);

std::size_t symmetric_difference_size(const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b);

}  // namespace media
