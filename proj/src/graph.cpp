#include "media/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace media {

Graph::Graph(std::vector<std::string> vertex_labels, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<std::optional<EdgeLabel>> edge_labels)
    : labels_(std::move(vertex_labels)) {
    const std::size_t n = labels_.size();
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_) {
            if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
        }
    }
    if (!edge_labels.empty() && edge_labels.size() != edges.size()) {
        throw InputError("edge label count does not match edge count");
    }
    edge_labels.resize(edges.size());

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return labels_[a] < labels_[b]; });
    rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) rank_[order_[r]] = r;

    struct Item {
        Edge e;
        std::optional<EdgeLabel> label;
    };
    std::vector<Item> items;
    items.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if (a >= n || b >= n) throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("self-loop at vertex '" + labels_[a] + "'");
        auto label = edge_labels[i];
        if (rank_[a] > rank_[b]) {
            std::swap(a, b);
            if (label) std::swap(label->forward, label->backward);
        }
        items.push_back({{a, b}, std::move(label)});
    }
    std::sort(items.begin(), items.end(), [&](const Item& x, const Item& y) {
        return std::pair(rank_[x.e.first], rank_[x.e.second]) < std::pair(rank_[y.e.first], rank_[y.e.second]);
    });
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].e == items[i - 1].e) {
            throw InputError("multiple edges between '" + labels_[items[i].e.first] + "' and '" +
                             labels_[items[i].e.second] + "'");
        }
    }

    adjacency_.assign(n, {});
    incident_.assign(n, {});
    for (EdgeIndex i = 0; i < items.size(); ++i) {
        const Edge e = items[i].e;
        edges_.push_back(e);
        edge_labels_.push_back(std::move(items[i].label));
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
        incident_[e.first].emplace_back(e.second, i);
        incident_[e.second].emplace_back(e.first, i);
    }
    for (Vertex v = 0; v < n; ++v) {
        std::sort(adjacency_[v].begin(), adjacency_[v].end());
        std::sort(incident_[v].begin(), incident_[v].end());
    }
}

std::optional<Vertex> Graph::find_vertex(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::vertex(const std::string& label) const {
    if (auto v = find_vertex(label)) return *v;
    throw InputError("unknown vertex '" + label + "'");
}

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const {
    if (a >= labels_.size() || b >= labels_.size()) return std::nullopt;
    const auto& inc = incident_[a];
    auto it = std::lower_bound(inc.begin(), inc.end(), std::pair<Vertex, EdgeIndex>(b, 0));
    if (it == inc.end() || it->first != b) return std::nullopt;
    return it->second;
}

EdgeIndex Graph::edge_index(Vertex a, Vertex b) const {
    if (auto e = find_edge(a, b)) return *e;
    throw InputError("{" + (a < labels_.size() ? labels_[a] : std::string("?")) + ", " +
                     (b < labels_.size() ? labels_[b] : std::string("?")) + "} is not an edge");
}

std::vector<Arc> Graph::arcs() const {
    std::vector<Arc> out;
    out.reserve(2 * edges_.size());
    for (const auto& e : edges_) {
        out.push_back({e.first, e.second});
        out.push_back({e.second, e.first});
    }
    return out;
}

DistanceTable bfs_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceTable d(n);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        queue.assign(1, s);
        d.at(s, s) = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (Vertex v : g.neighbors(u)) {
                if (d(s, v) == DistanceTable::unreachable) {
                    d.at(s, v) = d(s, u) + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return d;
}

DistanceTable all_pairs_distances(const Graph& g) {
    DistanceTable d = bfs_distances(g);
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = 0; b < g.vertex_count(); ++b) {
            if (d(a, b) == DistanceTable::unreachable) {
                throw DisconnectedGraph(a, b, "graph is disconnected: no path from '" + g.label(a) +
                                                  "' to '" + g.label(b) + "'");
            }
        }
    }
    return d;
}

namespace {

std::optional<Vertex> first_unreachable_from_zero(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!seen[v]) return v;
    }
    return std::nullopt;
}

void require_connected_bipartite(const Graph& g, const DistanceTable& d) {
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = 0; b < g.vertex_count(); ++b) {
            if (d(a, b) == DistanceTable::unreachable) throw InputError("graph is not connected");
        }
    }
    if (!is_bipartite(g).bipartite) throw InputError("graph is not bipartite");
}

void require_arc(const Graph& g, Arc a) {
    if (!g.adjacent(a.tail, a.head)) {
        throw InputError("(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ") is not an edge");
    }
}

struct EquivalenceResult {
    std::vector<std::vector<std::size_t>> classes;  // ordered by smallest member
    std::optional<TransitivityWitness<std::size_t>> witness;
};

// Classes of the transitive closure of a reflexive symmetric relation given
// as a matrix; when the relation is not transitive, the witness comes from
// the first three vertices of a shortest path between an unrelated pair of
// the same class.
EquivalenceResult close_relation(const std::vector<std::vector<bool>>& related) {
    const std::size_t n = related.size();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    EquivalenceResult out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        const std::size_t id = out.classes.size();
        out.classes.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            out.classes[id].push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (related[u][v] && comp[v] == SIZE_MAX) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out.classes[id].begin(), out.classes[id].end());
    }
    for (const auto& cls : out.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (related[cls[i]][cls[j]]) continue;
                const std::size_t from = cls[i], to = cls[j];
                std::vector<std::size_t> parent(n, SIZE_MAX);
                std::deque<std::size_t> queue{from};
                parent[from] = from;
                while (!queue.empty() && parent[to] == SIZE_MAX) {
                    std::size_t u = queue.front();
                    queue.pop_front();
                    for (std::size_t v = 0; v < n; ++v) {
                        if (related[u][v] && parent[v] == SIZE_MAX) {
                            parent[v] = u;
                            queue.push_back(v);
                        }
                    }
                }
                std::vector<std::size_t> path{to};
                while (path.back() != from) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                out.witness = TransitivityWitness<std::size_t>{path[0], path[1], path[2]};
                return out;
            }
        }
    }
    return out;
}

}  // namespace

bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || !first_unreachable_from_zero(g).has_value();
}

BipartiteCheck is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> depth(n, DistanceTable::unreachable);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < n; ++root) {
        if (depth[root] != DistanceTable::unreachable) continue;
        depth[root] = 0;
        parent[root] = root;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (depth[v] == DistanceTable::unreachable) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if ((depth[v] + depth[u]) % 2 == 0) {
                    // Same colour: climb to the lowest common ancestor.
                    std::vector<Vertex> left{u}, right{v};
                    while (left.back() != right.back()) {
                        if (depth[left.back()] >= depth[right.back()]) {
                            left.push_back(parent[left.back()]);
                        } else {
                            right.push_back(parent[right.back()]);
                        }
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    return {false, left};
                }
            }
        }
    }
    return {true, {}};
}

bool is_bipartite_by_distance(const Graph& g, const DistanceTable& d) {
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        for (const auto& e : g.edges()) {
            if (d(w, e.first) == d(w, e.second)) return false;
        }
    }
    return true;
}

std::vector<Vertex> semicube(const Graph& g, const DistanceTable& d, Vertex s, Vertex t) {
    require_arc(g, {s, t});
    std::vector<Vertex> out;
    for (Vertex p = 0; p < g.vertex_count(); ++p) {
        if (d(p, s) < d(p, t)) out.push_back(p);
    }
    return out;
}

std::vector<Vertex> semicube(const Graph& g, Vertex s, Vertex t) {
    return semicube(g, bfs_distances(g), s, t);
}

bool theta(const Graph& g, const DistanceTable& d, Arc e1, Arc e2) {
    require_arc(g, e1);
    require_arc(g, e2);
    const auto [s, t] = e1;
    const auto [p, q] = e2;
    return std::int64_t{d(s, p)} + d(t, q) != std::int64_t{d(s, q)} + d(t, p);
}

ThetaResult theta_classes(const Graph& g, const DistanceTable& d) {
    require_connected_bipartite(g, d);
    const std::size_t m = g.edge_count();
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (EdgeIndex i = 0; i < m; ++i) {
        for (EdgeIndex j = i; j < m; ++j) {
            const auto& a = g.edge(i);
            const auto& b = g.edge(j);
            rel[i][j] = rel[j][i] = theta(g, d, {a.first, a.second}, {b.first, b.second});
        }
    }
    auto closed = close_relation(rel);
    if (closed.witness) {
        return TransitivityWitness<EdgeIndex>{closed.witness->first, closed.witness->middle,
                                              closed.witness->last};
    }
    ThetaPartition part;
    part.class_of_edge.resize(m);
    part.classes = std::move(closed.classes);
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        for (EdgeIndex e : part.classes[c]) part.class_of_edge[e] = c;
    }
    return part;
}

ThetaResult theta_classes(const Graph& g) { return theta_classes(g, bfs_distances(g)); }

namespace {

// Shared prefix of every recognition method: connectivity then bipartiteness.
std::optional<GraphWitness> connected_bipartite_witness(const Graph& g) {
    if (g.vertex_count() == 0) return NotConnectedWitness{0, 0};
    if (auto v = first_unreachable_from_zero(g)) return NotConnectedWitness{0, *v};
    if (auto b = is_bipartite(g); !b.bipartite) return OddCycleWitness{b.odd_cycle};
    return std::nullopt;
}

}  // namespace

PartialCubeCheck partial_cube_by_theta(const Graph& g) {
    if (auto w = connected_bipartite_witness(g)) return {false, false, false, w};
    auto result = theta_classes(g);
    if (auto* w = std::get_if<TransitivityWitness<EdgeIndex>>(&result)) {
        return {false, false, false, ThetaWitness{*w}};
    }
    return {true, true, false, std::nullopt};
}

PartialCubeCheck partial_cube_by_convexity(const Graph& g) {
    if (auto w = connected_bipartite_witness(g)) return {false, false, false, w};
    const auto d = bfs_distances(g);
    const std::size_t n = g.vertex_count();
    for (const Arc& arc : g.arcs()) {
        const auto w = semicube(g, d, arc.tail, arc.head);
        std::vector<bool> inside(n, false);
        for (Vertex v : w) inside[v] = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                const Vertex a = w[i], b = w[j];
                for (Vertex x = 0; x < n; ++x) {
                    if (!inside[x] && d(a, x) + d(x, b) == d(a, b)) {
                        return {false, false, false, NonConvexSemicubeWitness{arc, a, b, x}};
                    }
                }
            }
        }
    }
    return {true, false, true, std::nullopt};
}

PartialCubeCheck is_partial_cube(const Graph& g) {
    auto by_theta = partial_cube_by_theta(g);
    auto by_convexity = partial_cube_by_convexity(g);
    if (by_theta.partial_cube != by_convexity.partial_cube) {
        throw std::logic_error("partial-cube recognition methods disagree");
    }
    by_theta.by_theta = by_theta.partial_cube;
    by_theta.by_convexity = by_convexity.partial_cube;
    return by_theta;
}

std::size_t symmetric_difference_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
            ++n;
        } else {
            ++j;
            ++n;
        }
    }
    return n + (a.size() - i) + (b.size() - j);
}

HypercubeEmbedding embed_hypercube(const Graph& g, const DistanceTable& d) {
    if (auto w = connected_bipartite_witness(g)) throw InputError("graph is not a partial cube");
    auto result = theta_classes(g, d);
    auto* part = std::get_if<ThetaPartition>(&result);
    if (!part) throw InputError("graph is not a partial cube: Theta is not transitive");

    HypercubeEmbedding emb{g.canonical_order().front(), std::move(*part), {}};
    const std::size_t n = g.vertex_count();
    emb.coordinates.assign(n, {});
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{emb.base};
    seen[emb.base] = true;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (seen[v]) continue;
            seen[v] = true;
            auto coords = emb.coordinates[u];
            const std::size_t c = emb.classes.class_of_edge[g.edge_index(u, v)];
            coords.insert(std::upper_bound(coords.begin(), coords.end(), c), c);
            emb.coordinates[v] = std::move(coords);
            queue.push_back(v);
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (symmetric_difference_size(emb.coordinates[a], emb.coordinates[b]) != d(a, b)) {
                throw std::logic_error("hypercube embedding is not isometric");
            }
        }
    }
    return emb;
}

HypercubeEmbedding embed_hypercube(const Graph& g) { return embed_hypercube(g, bfs_distances(g)); }

int classify_edge_pair(const Graph& g, const DistanceTable& d, Arc st, Arc pq) {
    require_arc(g, st);
    require_arc(g, pq);
    if (g.edge_index(st.tail, st.head) == g.edge_index(pq.tail, pq.head)) {
        throw InputError("edge pair classification needs two distinct edges");
    }
    const auto [s, t] = st;
    const auto [p, q] = pq;
    for (Vertex x : {s, t, p, q}) {
        for (Vertex y : {s, t, p, q}) {
            if (d(x, y) == DistanceTable::unreachable) throw InputError("graph is not connected");
        }
    }
    const std::int64_t sp = d(s, p), tq = d(t, q), tp = d(t, p), sq = d(s, q);
    if (tp == sq && tp == sp + 1 && tp == tq - 1) return 1;
    if (tp == sq && tp == sp - 1 && tp == tq + 1) return 2;
    if (sp == tq && sp == tp + 1 && sp == sq - 1) return 3;
    if (sp == tq && sp == tp - 1 && sp == sq + 1) return 4;
    if (sp == tq && sp == tp + 1 && sp == sq + 1) return 5;
    if (sp == tq && sp == tp - 1 && sp == sq - 1) return 6;
    throw InputError("edge pair fits no case; the graph is not bipartite");
}

bool arc_relation(const DistanceTable& d, Arc st, Arc pq) {
    const auto [s, t] = st;
    const auto [p, q] = pq;
    const std::int64_t sp = d(s, p), tq = d(t, q), tp = d(t, p), sq = d(s, q);
    return sp == tq && sp == tp - 1 && sp == sq - 1;
}

MediaticCheck is_mediatic(const Graph& g) {
    if (auto w = connected_bipartite_witness(g)) return {false, w};
    const auto d = bfs_distances(g);
    const auto arcs = g.arcs();
    const std::size_t a = arcs.size();
    std::vector<std::vector<bool>> rel(a, std::vector<bool>(a, false));
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < a; ++j) rel[i][j] = arc_relation(d, arcs[i], arcs[j]);
    }
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < a; ++j) {
            if (rel[i][j] != rel[j][i]) throw std::logic_error("arc relation is not symmetric");
        }
    }
    auto closed = close_relation(rel);
    if (closed.witness) {
        return {false, ArcRelationWitness{{arcs[closed.witness->first], arcs[closed.witness->middle],
                                           arcs[closed.witness->last]}}};
    }
    return {true, std::nullopt};
}

}  // namespace media
