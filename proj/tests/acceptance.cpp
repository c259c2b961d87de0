// Acceptance suite: one PASS/FAIL line per criterion. Derived quantities are
// recomputed here from plain BFS and brute-force enumeration, not taken from
// the library routines under test.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "media/axioms.hpp"
#include "media/family.hpp"
#include "media/io.hpp"
#include "media/morphisms.hpp"
#include "media/structure.hpp"

#ifndef MEDIA_CLI_PATH
#error "MEDIA_CLI_PATH must name the media executable"
#endif

using namespace media;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::size_t failures = 0;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures++ == 0) first_failure = what;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Run {
    int exit_code;
    std::string out;
    double seconds;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(MEDIA_CLI_PATH) + " " + args + " 2>/dev/null";
    const auto start = Clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    std::string out;
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, seconds_since(start)};
}

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / ("media_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

// ---- independent oracles ---------------------------------------------------

using Table = std::vector<std::vector<int>>;

Table bfs_table(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    Table d(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        d[s][s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            const auto u = q.front();
            q.pop_front();
            for (auto v : adj[u]) {
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    q.push_back(v);
                }
            }
        }
    }
    return d;
}

std::vector<std::vector<std::size_t>> state_adjacency(const TokenSystem& sys) {
    std::vector<std::vector<std::size_t>> adj(sys.state_count());
    for (StateIndex s = 0; s < sys.state_count(); ++s) {
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            if (sys.moves(s, t)) adj[s].push_back(sys.next(s, t));
        }
    }
    return adj;
}

std::vector<std::vector<std::size_t>> graph_adjacency(const Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    return adj;
}

// States strictly closer to the head of some arc of t than to its tail.
std::set<StateIndex> metric_semicube(const TokenSystem& sys, const Table& d, TokenIndex t) {
    std::set<StateIndex> out;
    for (StateIndex a = 0; a < sys.state_count(); ++a) {
        if (!sys.moves(a, t)) continue;
        const StateIndex b = sys.next(a, t);
        for (StateIndex s = 0; s < sys.state_count(); ++s) {
            if (d[s][b] < d[s][a]) out.insert(s);
        }
        break;
    }
    return out;
}

// Number of shortest paths between every ordered pair.
std::vector<std::vector<std::size_t>> geodesic_counts(const std::vector<std::vector<std::size_t>>& adj,
                                                      const Table& d) {
    const std::size_t n = adj.size();
    std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> order(n);
        for (std::size_t v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return d[s][a] < d[s][b]; });
        c[s][s] = 1;
        for (auto v : order) {
            for (auto u : adj[v]) {
                if (d[s][u] + 1 == d[s][v]) c[s][v] += c[s][u];
            }
        }
    }
    return c;
}

// common[e][f]: some shortest path traverses both edges.
std::vector<std::vector<bool>> common_geodesic_table(const Graph& g, const Table& d) {
    const std::size_t m = g.edge_count();
    std::vector<std::vector<bool>> table(m, std::vector<bool>(m, false));
    const auto adj = graph_adjacency(g);
    std::vector<std::size_t> path;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t u, std::size_t target) {
        if (u == target) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                for (std::size_t j = 0; j + 1 < path.size(); ++j) {
                    table[g.edge_index(path[i], path[i + 1])][g.edge_index(path[j], path[j + 1])] = true;
                }
            }
            return;
        }
        for (auto v : adj[u]) {
            if (d[v][target] + 1 != d[u][target]) continue;
            path.push_back(v);
            walk(v, target);
            path.pop_back();
        }
    };
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        for (std::size_t b = 0; b < g.vertex_count(); ++b) {
            path = {a};
            walk(a, b);
        }
    }
    return table;
}

bool winkler(const Table& d, Arc e, Arc f) {
    return d[e.tail][f.tail] + d[e.head][f.head] != d[e.tail][f.head] + d[e.head][f.tail];
}

// ---- corpora ----------------------------------------------------------------

struct Named {
    std::string name;
    Medium medium;
};

std::vector<Named> round_trip_corpus() {
    std::vector<Named> out;
    auto add = [&](std::string name, const SetFamily& f) {
        out.push_back({std::move(name), require_medium(representing_token_system(f))});
    };
    for (std::size_t k = 1; k <= 4; ++k) add("Q" + std::to_string(k), hypercube_family(k));
    for (std::size_t k : {4, 6, 8}) add("C" + std::to_string(k), cycle_family(k));
    for (std::size_t k = 2; k <= 5; ++k) add("P" + std::to_string(k), path_family(k));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t ground = 3 + seed % 3;
        const std::size_t size = 2 + seed % std::min<std::size_t>(15, (std::size_t{1} << ground) - 1);
        add("wg" + std::to_string(seed), random_wg_family(ground, size, seed));
    }
    return out;
}

// ---- criteria ---------------------------------------------------------------

Outcome k23_rejection(const fs::path& dir) {
    Outcome o;
    const auto file = dir / "k23.txt";
    write_file(file.string(), "a x\na y\na z\nb x\nb y\nb z\n");
    double total = 0;
    for (const std::string cmd : {"pcube", "mediatic"}) {
        const auto r = run_cli("graphx " + cmd + " " + shell_quote(file.string()));
        total += r.seconds;
        o.expect(r.exit_code == 1, cmd + " exit " + std::to_string(r.exit_code));
        o.expect(r.out.find("\"ThetaNotTransitive\"") != std::string::npos, cmd + " reports no Theta witness");
    }
    o.expect(total < 1.0, "took " + std::to_string(total) + " s");
    std::ostringstream s;
    s << "pcube and mediatic exit 1 with a Theta-transitivity witness in " << total << " s";
    o.detail = s.str();
    return o;
}

Outcome wg_cross_validation() {
    Outcome o;
    const auto start = Clock::now();
    std::vector<std::pair<std::string, SetFamily>> cases;
    cases.emplace_back("C4", cycle_family(4));
    cases.emplace_back("C6", cycle_family(6));
    cases.emplace_back("Q3", hypercube_family(3));
    cases.emplace_back("NWG", SetFamily::from_labels({"x", "y", "z"},
                                                     {{}, {"x"}, {"x", "y"}, {"x", "y", "z"}, {"z"}}));
    cases.emplace_back("DISC", SetFamily::from_labels({"a", "b", "c", "d"},
                                                      {{"a"}, {"b"}, {"a", "b"}, {"c"}, {"d"}, {"c", "d"}}));
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t ground = 1 + rng() % 4;
        const std::size_t cap = std::min<std::size_t>(6, std::size_t{1} << ground);
        const std::size_t size = 2 + rng() % (cap - 1);
        cases.emplace_back("random" + std::to_string(i), random_family(ground, size, 0.7, rng));
    }
    std::size_t wg = 0, inconclusive = 0;
    for (const auto& [name, f] : cases) {
        const bool well_graded = is_well_graded(f).well_graded;
        wg += well_graded;
        std::optional<TokenSystem> sys;
        try {
            sys = representing_token_system(f);
        } catch (const InputError&) {
            // No token system at all, so certainly not a medium.
        }
        const bool medium = sys && is_medium(*sys).is_medium();
        o.expect(well_graded == medium, name + ": well-graded " + std::to_string(well_graded));
        if (!sys) continue;
        const auto p = pairing_of(*sys);
        const bool m1 = oracle_m1(*sys, p).holds;
        const bool m2_violated = oracle_m2(*sys, p, default_m2_bound(*sys)).has_value();
        if (medium) {
            o.expect(m1 && !m2_violated, name + ": oracle refutes a medium");
        } else if (m1 && !m2_violated) {
            ++inconclusive;
        }
    }
    const double t = seconds_since(start);
    o.expect(t < 180.0, "took " + std::to_string(t) + " s");
    std::ostringstream s;
    s << cases.size() << " families (" << wg << " well-graded), " << inconclusive << " oracle-inconclusive, "
      << o.failures << " disagreements, " << t << " s";
    o.detail = s.str();
    return o;
}

Outcome round_trip(const std::vector<Named>& corpus) {
    Outcome o;
    for (const auto& [name, m] : corpus) {
        const auto canon = canonical_form(m);
        o.expect(is_isomorphic(m, canon.representing).has_value(), name);
    }
    o.detail = std::to_string(corpus.size() - o.failures) + "/" + std::to_string(corpus.size()) +
               " media isomorphic to their canonical form";
    return o;
}

Outcome theta_classes_match_tokens(const std::vector<Named>& corpus) {
    Outcome o;
    for (const auto& [name, m] : corpus) {
        const auto& sys = m.system();
        const Graph& g = m.graph();
        const auto d = bfs_table(graph_adjacency(g));
        const auto theta = theta_classes(g);
        if (!std::holds_alternative<ThetaPartition>(theta)) {
            o.expect(false, name + ": Theta not transitive");
            continue;
        }
        const auto& part = std::get<ThetaPartition>(theta);
        o.expect(2 * part.class_count() == sys.token_count(), name + ": class count");
        // Class index of each token, from the edges it moves along.
        std::vector<std::size_t> cls(sys.token_count(), SIZE_MAX);
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            std::set<EdgeIndex> edges;
            std::optional<Arc> first;
            for (StateIndex a = 0; a < sys.state_count(); ++a) {
                if (!sys.moves(a, t)) continue;
                const Arc arc{a, sys.next(a, t)};
                edges.insert(g.edge_index(arc.tail, arc.head));
                if (!first) first = arc;
                // Orientation: every arc leaves the same side of the class.
                o.expect(d[arc.tail][first->tail] < d[arc.tail][first->head] &&
                             d[arc.head][first->head] < d[arc.head][first->tail],
                         name + ": token " + sys.token_label(t) + " arcs disagree in orientation");
            }
            std::set<std::size_t> classes;
            for (auto e : edges) classes.insert(part.class_of_edge[e]);
            o.expect(classes.size() == 1, name + ": token " + sys.token_label(t) + " spans classes");
            if (classes.size() != 1) continue;
            cls[t] = *classes.begin();
            const auto& members = part.classes[cls[t]];
            o.expect(std::set<EdgeIndex>(members.begin(), members.end()) == edges,
                     name + ": token " + sys.token_label(t) + " misses edges of its class");
            for (auto e : members) {
                for (auto f : members) o.expect(winkler(d, {g.edge(e).first, g.edge(e).second},
                                                        {g.edge(f).first, g.edge(f).second}),
                                                name + ": class not Theta-related");
            }
        }
        // Each class is hit by exactly one token pair.
        std::map<std::size_t, std::set<TokenIndex>> by_class;
        for (TokenIndex t = 0; t < sys.token_count(); ++t) by_class[cls[t]].insert(t);
        o.expect(by_class.size() == part.class_count(), name + ": pairing is not onto the classes");
        for (const auto& [c, tokens] : by_class) {
            o.expect(tokens.size() == 2, name + ": class with " + std::to_string(tokens.size()) + " tokens");
            if (tokens.size() == 2) {
                o.expect(m.reverse(*tokens.begin()) == *tokens.rbegin(), name + ": class tokens not mutual reverses");
            }
        }
    }
    o.detail = std::to_string(corpus.size()) + " media, " + std::to_string(o.failures) + " violations";
    return o;
}

Outcome contents(const std::vector<Named>& corpus) {
    Outcome o;
    for (const auto& [name, m] : corpus) {
        const auto& sys = m.system();
        const auto d = bfs_table(state_adjacency(sys));
        const std::size_t n = sys.state_count();
        std::vector<std::set<StateIndex>> w(sys.token_count());
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            w[t] = metric_semicube(sys, d, t);
            const auto lib = token_semicube(m, t);
            o.expect(std::set<StateIndex>(lib.begin(), lib.end()) == w[t], name + ": semicube of " + sys.token_label(t));
        }
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            const auto& a = w[t];
            const auto& b = w[m.reverse(t)];
            std::set<StateIndex> both;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.end()));
            o.expect(a.size() + b.size() == n && both.size() == n, name + ": semicubes do not split the states");
            for (auto x : a) {
                for (auto y : a) {
                    for (StateIndex z = 0; z < n; ++z) {
                        if (d[x][z] + d[z][y] == d[x][y]) o.expect(a.count(z) == 1, name + ": semicube not convex");
                    }
                }
            }
        }
        std::set<std::set<TokenIndex>> seen;
        const auto family = content_family(m);
        for (StateIndex s = 0; s < n; ++s) {
            std::set<TokenIndex> expected;
            for (TokenIndex t = 0; t < sys.token_count(); ++t) {
                if (w[t].count(s)) expected.insert(t);
            }
            o.expect(expected.size() * 2 == sys.token_count(), name + ": content size");
            o.expect(content_of(m, s) == expected && family[s] == expected, name + ": content of " + sys.state_label(s));
            seen.insert(expected);
        }
        o.expect(seen.size() == n, name + ": content map not injective");
    }
    o.detail = std::to_string(corpus.size()) + " media, " + std::to_string(o.failures) + " violations";
    return o;
}

std::vector<const Named*> small(const std::vector<Named>& corpus) {
    std::vector<const Named*> out;
    for (const auto& m : corpus) {
        if (m.medium.state_count() <= 16) out.push_back(&m);
    }
    return out;
}

Outcome concise_laws(const std::vector<Named>& corpus) {
    Outcome o;
    std::size_t pairs = 0, messages = 0;
    const auto media = small(corpus);
    for (const auto* named : media) {
        const auto& m = named->medium;
        const auto& name = named->name;
        const auto& sys = m.system();
        const auto adj = state_adjacency(sys);
        const auto d = bfs_table(adj);
        const auto counts = geodesic_counts(adj, d);
        const auto family = content_family(m);
        for (StateIndex s = 0; s < sys.state_count(); ++s) {
            std::map<std::set<TokenIndex>, StateIndex> landing;
            for (StateIndex v = 0; v < sys.state_count(); ++v) {
                if (s == v) continue;
                ++pairs;
                const auto msgs = enumerate_concise(m, s, v);
                messages += msgs.size();
                o.expect(msgs.size() == counts[s][v], name + ": concise count differs from geodesic count");
                std::set<TokenIndex> expected;
                std::set_difference(family[v].begin(), family[v].end(), family[s].begin(), family[s].end(),
                                    std::inserter(expected, expected.end()));
                for (const auto& msg : msgs) {
                    o.expect(is_concise(sys, s, msg, m.pairing()) && apply(sys, s, msg).final_state == v,
                             name + ": enumerated message is not concise for its pair");
                    o.expect(static_cast<int>(msg.size()) == d[s][v], name + ": unequal lengths");
                    o.expect(content(msg) == expected, name + ": content differs from the content difference");
                }
                if (msgs.empty()) continue;
                const auto c = content(msgs.front());
                const auto [it, fresh] = landing.emplace(c, v);
                o.expect(fresh, name + ": equal contents reach different states");
            }
        }
    }
    std::ostringstream s;
    s << media.size() << " media, " << pairs << " ordered pairs, " << messages << " messages, " << o.failures
      << " violations";
    o.detail = s.str();
    return o;
}

Outcome metric(const std::vector<Named>& corpus) {
    Outcome o;
    std::size_t triples = 0;
    const auto media = small(corpus);
    for (const auto* named : media) {
        const auto& m = named->medium;
        const std::size_t n = m.state_count();
        const auto d = bfs_table(state_adjacency(m.system()));
        std::vector<std::vector<std::size_t>> delta_table(n, std::vector<std::size_t>(n));
        for (StateIndex a = 0; a < n; ++a) {
            for (StateIndex b = 0; b < n; ++b) {
                delta_table[a][b] = delta(m, a, b);
                o.expect(d[a][b] >= 0 && delta_table[a][b] == static_cast<std::size_t>(d[a][b]),
                         named->name + ": delta differs from graph distance");
                o.expect(delta_table[a][b] == m.distances()(a, b), named->name + ": delta differs from the graph table");
                o.expect((delta_table[a][b] == 0) == (a == b), named->name + ": identity of indiscernibles");
            }
        }
        for (StateIndex a = 0; a < n; ++a) {
            for (StateIndex b = 0; b < n; ++b) {
                o.expect(delta_table[a][b] == delta_table[b][a], named->name + ": asymmetric");
                for (StateIndex c = 0; c < n; ++c) {
                    ++triples;
                    o.expect(delta_table[a][c] <= delta_table[a][b] + delta_table[b][c], named->name + ": triangle");
                }
            }
        }
    }
    o.detail = std::to_string(media.size()) + " media, " + std::to_string(triples) + " triples, exact integer equality";
    return o;
}

Outcome edge_pairs() {
    Outcome o;
    std::size_t pairs = 0;
    std::map<int, std::size_t> histogram;
    for (const auto& [name, f] : {std::pair{"Q3", hypercube_family(3)}, std::pair{"C6", cycle_family(6)}}) {
        const auto m = require_medium(representing_token_system(f));
        const Graph& g = m.graph();
        const auto d = bfs_table(graph_adjacency(g));
        const auto lib_d = all_pairs_distances(g);
        const auto common = common_geodesic_table(g, d);
        const auto arcs = g.arcs();
        for (const auto& a : arcs) {
            for (const auto& b : arcs) {
                const EdgeIndex ea = g.edge_index(a.tail, a.head), eb = g.edge_index(b.tail, b.head);
                if (ea == eb) continue;
                ++pairs;
                const int c = classify_edge_pair(g, lib_d, a, b);
                ++histogram[c];
                o.expect(c >= 1 && c <= 6, std::string(name) + ": case out of range");
                o.expect((c >= 5) == winkler(d, a, b), std::string(name) + ": cases 5/6 differ from Theta");
                o.expect((c <= 4) == common[ea][eb], std::string(name) + ": cases 1-4 differ from common geodesics");
            }
        }
    }
    std::ostringstream s;
    s << pairs << " ordered arc pairs, cases";
    for (const auto& [c, k] : histogram) s << " " << c << ":" << k;
    s << ", " << o.failures << " violations";
    o.detail = s.str();
    return o;
}

bool connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    const auto d = bfs_table(adj);
    return std::all_of(d[0].begin(), d[0].end(), [](int x) { return x >= 0; });
}

Outcome partial_cubes_are_mediatic() {
    Outcome o;
    std::size_t graphs = 0, cubes = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
        // Every edge set between parts {0..a-1} and {a..n-1}; every connected
        // bipartite graph on n labelled vertices appears up to relabelling.
        for (std::size_t a = (n == 1 ? 0 : 1); a <= n / 2; ++a) {
            std::vector<std::pair<Vertex, Vertex>> slots;
            for (Vertex u = 0; u < a; ++u) {
                for (Vertex v = a; v < n; ++v) slots.emplace_back(u, v);
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
                std::vector<std::pair<Vertex, Vertex>> edges;
                for (std::size_t i = 0; i < slots.size(); ++i) {
                    if (mask >> i & 1) edges.push_back(slots[i]);
                }
                if (!connected(n, edges)) continue;
                ++graphs;
                const Graph g(labels, edges);
                const bool by_theta = partial_cube_by_theta(g).partial_cube;
                const bool by_convexity = partial_cube_by_convexity(g).partial_cube;
                const bool mediatic = is_mediatic(g).mediatic;
                cubes += by_theta;
                std::ostringstream s;
                s << "n=" << n << " mask=" << mask;
                o.expect(by_theta == by_convexity, s.str() + ": recognition methods disagree");
                o.expect(by_theta == mediatic, s.str() + ": partial cube differs from mediatic");
            }
        }
    }
    std::ostringstream s;
    s << graphs << " connected bipartite graphs on <= 7 vertices (" << cubes << " partial cubes), " << o.failures
      << " disagreements";
    o.detail = s.str();
    return o;
}

struct Conditions {
    bool two_gon;
    bool regular;
    bool rotations_two_gons;
    bool opposite_reversed;
};

Conditions evaluate(const Medium& m, StateIndex s, const Message& w) {
    const auto& sys = m.system();
    const std::size_t len = w.size(), half = len / 2;
    std::vector<StateIndex> at{s};
    for (TokenIndex t : w) at.push_back(sys.next(at.back(), t));
    auto rotated = [&](std::size_t k) {
        Message r(w.begin() + k, w.end());
        r.insert(r.end(), w.begin(), w.begin() + k);
        return r;
    };
    auto two_gon_at = [&](std::size_t k) {
        const auto r = rotated(k);
        const std::span<const TokenIndex> first(r.data(), half), second(r.data() + half, half);
        return is_concise(sys, at[k], first, m.pairing()) && is_concise(sys, at[(k + half) % len], second, m.pairing());
    };
    Conditions c{two_gon_at(0), true, true, true};
    for (std::size_t k = 0; k < len; ++k) {
        const auto r = rotated(k);
        c.regular = c.regular && is_concise(sys, at[k], std::span<const TokenIndex>(r.data(), half), m.pairing());
        c.rotations_two_gons = c.rotations_two_gons && two_gon_at(k);
    }
    for (std::size_t i = 0; i < half; ++i) c.opposite_reversed = c.opposite_reversed && m.reverse(w[i]) == w[i + half];
    return c;
}

Outcome regular_circuits() {
    Outcome o;
    std::size_t walks = 0, two_gons = 0, phenomenon = 0;
    for (const auto& [name, f] :
         {std::pair{"C4", cycle_family(4)}, std::pair{"C6", cycle_family(6)}, std::pair{"Q3", hypercube_family(3)}}) {
        const auto m = require_medium(representing_token_system(f));
        const auto& sys = m.system();
        for (StateIndex s = 0; s < m.state_count(); ++s) {
            Message walk;
            std::function<void(StateIndex)> go = [&](StateIndex cur) {
                if (!walk.empty() && cur == s) {
                    ++walks;
                    const auto c = evaluate(m, s, walk);
                    const auto lib = regular_circuit_check(m, s, walk);
                    o.expect(lib.is_two_gon == c.two_gon && lib.opposite_reversed == c.opposite_reversed,
                             std::string(name) + ": library report differs from the oracle");
                    if (c.two_gon) {
                        ++two_gons;
                        o.expect(c.regular == c.rotations_two_gons && c.regular == c.opposite_reversed,
                                 std::string(name) + ": conditions differ on a 2-gon");
                        o.expect(lib.is_regular == c.regular && lib.rotations_two_gons == c.rotations_two_gons,
                                 std::string(name) + ": library regularity differs from the oracle");
                    } else if (c.opposite_reversed && !c.regular) {
                        ++phenomenon;
                    }
                }
                if (walk.size() == 8) return;
                for (TokenIndex t = 0; t < sys.token_count(); ++t) {
                    if (!sys.moves(cur, t)) continue;
                    walk.push_back(t);
                    go(sys.next(cur, t));
                    walk.pop_back();
                }
            };
            go(s);
        }
    }
    o.expect(phenomenon > 0, "no closed walk with reversed opposite tokens that is neither a 2-gon nor regular");
    std::ostringstream s;
    s << walks << " closed walks, " << two_gons << " 2-gons, " << phenomenon
      << " non-2-gons with reversed opposite tokens that are not regular";
    o.detail = s.str();
    return o;
}

SetFamily product(const SetFamily& a, const SetFamily& b) {
    auto ground = a.ground();
    for (std::size_t i = 0; i < b.ground().size(); ++i) ground.push_back("f" + std::to_string(i));
    std::vector<ElementSet> members;
    for (const auto& x : a.members()) {
        for (const auto& y : b.members()) {
            ElementSet s = x;
            for (auto e : y) s.push_back(e + a.ground().size());
            members.push_back(std::move(s));
        }
    }
    return SetFamily(std::move(ground), std::move(members));
}

Outcome reductions(const fs::path& dir) {
    Outcome o;
    const auto q3 = require_medium(representing_token_system(hypercube_family(3)));
    const auto c6 = require_medium(representing_token_system(cycle_family(6)));
    std::vector<StateIndex> q;
    for (const auto& l : c6.system().state_labels()) q.push_back(q3.system().state(l));
    const auto r = reduction(q3.system(), q);
    const auto verdict = is_medium(r.system);
    o.expect(verdict.is_medium(), "Q3 reduced to C6 states is not a medium");
    if (verdict.is_medium()) o.expect(is_isomorphic(verdict.medium(), c6).has_value(), "Q3 reduction is not C6");

    const auto p3 = representing_token_system(path_family(3));
    bool empty = false;
    try {
        reduction(p3, {0, 2});
    } catch (const EmptyReduction&) {
        empty = true;
    }
    o.expect(empty, "P3 endpoint reduction not rejected");
    const auto file = dir / "p3.json";
    write_file(file.string(), serialize_token_system(p3));
    const auto cli = run_cli("reduce " + shell_quote(file.string()) + " --states " +
                             shell_quote(p3.state_label(0) + "," + p3.state_label(2)) + " -o " +
                             shell_quote((dir / "p3r.json").string()));
    o.expect(cli.exit_code == 1 && cli.out.find("EmptyTokenSet") != std::string::npos,
             "CLI does not report the empty token set");

    std::mt19937_64 rng(11);
    std::size_t embeddings = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t ga = 2 + rng() % 3, gb = 2 + rng() % 2;
        const std::size_t sa = 2 + rng() % (std::min<std::size_t>(8, std::size_t{1} << ga) - 1);
        const std::size_t sb = 2 + rng() % (std::min<std::size_t>(4, std::size_t{1} << gb) - 1);
        const auto fa = random_wg_family(ga, sa, seed);
        const auto fb = random_wg_family(gb, sb, seed + 500);
        const auto fp = product(fa, fb);
        const auto source = require_medium(representing_token_system(fa));
        const auto target = require_medium(representing_token_system(fp));
        const std::size_t fixed = rng() % fb.size();
        SystemMap map;
        map.states.resize(source.state_count());
        for (std::size_t i = 0; i < fa.size(); ++i) {
            ElementSet image = fa.member(i);
            for (auto e : fb.member(fixed)) image.push_back(e + fa.ground().size());
            map.states[source.system().state(fa.member_label(i))] = target.system().state(fp.format(image));
        }
        for (TokenIndex t = 0; t < source.token_count(); ++t) {
            map.tokens.push_back(target.system().token(source.system().token_label(t)));
        }
        const std::string tag = "embedding " + std::to_string(seed);
        o.expect(check_embedding(source.system(), target.system(), map).holds, tag + " is not an embedding");
        const auto image = is_medium(reduction(target.system(), map.states).system);
        o.expect(image.is_medium(), tag + ": image reduction is not a medium");
        if (image.is_medium()) o.expect(is_isomorphic(source, image.medium()).has_value(), tag + ": image not isomorphic");
        ++embeddings;
    }
    std::ostringstream s;
    s << "Q3 -> C6 isomorphic, P3 endpoints rejected (EmptyTokenSet), " << embeddings
      << " product embeddings checked, " << o.failures << " violations";
    o.detail = s.str();
    return o;
}

}  // namespace

int main() {
    const auto dir = scratch_dir();
    const auto corpus = round_trip_corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"K2,3 rejection", [&] { return k23_rejection(dir); }},
        {"well-graded families vs media", wg_cross_validation},
        {"canonical form round trip", [&] { return round_trip(corpus); }},
        {"Theta classes vs token pairs", [&] { return theta_classes_match_tokens(corpus); }},
        {"contents and semicubes", [&] { return contents(corpus); }},
        {"concise-message laws", [&] { return concise_laws(corpus); }},
        {"state metric", [&] { return metric(corpus); }},
        {"edge-pair classification", edge_pairs},
        {"partial cube vs mediatic", partial_cubes_are_mediatic},
        {"regular circuits", regular_circuits},
        {"reductions", [&] { return reductions(dir); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail;
        if (!o.ok && o.failures > 0) std::cout << "; first failure: " << o.first_failure;
        std::cout << std::endl;
        failed += !o.ok;
    }
    fs::remove_all(dir);
    return failed == 0 ? 0 : 1;
}
