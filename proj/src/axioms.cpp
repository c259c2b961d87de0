#include "media/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace media {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string edge_text(const Graph& g, EdgeIndex e) {
    const auto& ed = g.edge(e);
    return "{" + g.label(ed.first) + ", " + g.label(ed.second) + "}";
}

}  // namespace

std::string describe(const TokenSystem& sys, const Violation& v) {
    auto st = [&](StateIndex s) { return "'" + sys.state_label(s) + "'"; };
    auto tk = [&](TokenIndex t) { return "'" + sys.token_label(t) + "'"; };
    return std::visit(
        overloaded{
            [&](const MissingReverse& w) { return "token " + tk(w.token) + " has no reverse"; },
            [&](const SelfReverse& w) { return "token " + tk(w.token) + " is its own reverse"; },
            [&](const DuplicateArcToken& w) {
                return "tokens " + tk(w.first) + " and " + tk(w.second) + " both move " + st(w.from) +
                       " to " + st(w.to);
            },
            [&](const Disconnected& w) {
                return "no path from " + st(w.from) + " to " + st(w.to) + " in the graph";
            },
            [&](const NotPartialCube&) { return std::string("graph is not a partial cube"); },
            [&](const Misaligned& w) { return "token " + tk(w.token) + ": " + w.reason; },
        },
        v);
}

std::variant<ReversePairing, Violation> find_reverse_pairing(const TokenSystem& sys) {
    std::vector<std::optional<TokenIndex>> partner(sys.token_count());
    for (TokenIndex t = 0; t < sys.token_count(); ++t) {
        auto r = reverse_of(sys, t);
        if (!r) return Violation{MissingReverse{t}};
        if (*r == t) return Violation{SelfReverse{t}};
        partner[t] = r;
    }
    return ReversePairing(std::move(partner));
}

std::variant<Graph, Violation> build_graph(const TokenSystem& sys, const ReversePairing& p) {
    if (p.size() != sys.token_count() || !p.total() || !p.fixed_point_free()) {
        throw InputError("build_graph needs a total, fixed-point-free reverse pairing");
    }
    std::map<std::pair<StateIndex, StateIndex>, TokenIndex> arc_token;
    for (StateIndex s = 0; s < sys.state_count(); ++s) {
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            if (!sys.moves(s, t)) continue;
            auto [it, fresh] = arc_token.emplace(std::pair(s, sys.next(s, t)), t);
            if (!fresh) return Violation{DuplicateArcToken{s, sys.next(s, t), it->second, t}};
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::optional<EdgeLabel>> labels;
    for (const auto& [arc, t] : arc_token) {
        const auto [s, v] = arc;
        if (s > v) continue;
        auto back = arc_token.find({v, s});
        // A reverse pairing realises every arc in both directions.
        if (back == arc_token.end() || back->second != *p.reverse(t)) {
            throw std::logic_error("arc without its reverse arc");
        }
        edges.emplace_back(s, v);
        labels.push_back(EdgeLabel{sys.token_label(t), sys.token_label(back->second)});
    }
    return Graph(sys.state_labels(), edges, std::move(labels));
}

Medium::Medium(TokenSystem sys, ReversePairing p, Graph g, DistanceTable d, MediumCertificate c)
    : system_(std::move(sys)),
      pairing_(std::move(p)),
      graph_(std::move(g)),
      distances_(std::move(d)),
      certificate_(std::move(c)) {}

std::optional<TokenIndex> Medium::token_between(StateIndex s, StateIndex v) const {
    for (TokenIndex t = 0; t < system_.token_count(); ++t) {
        if (s != v && system_.next(s, t) == v) return t;
    }
    return std::nullopt;
}

std::vector<Arc> Medium::arcs_of(TokenIndex t) const {
    std::vector<Arc> out;
    for (StateIndex s = 0; s < system_.state_count(); ++s) {
        if (system_.moves(s, t)) out.push_back({s, system_.next(s, t)});
    }
    return out;
}

std::vector<StateIndex> Medium::effective_states(TokenIndex t) const {
    std::vector<StateIndex> out;
    for (StateIndex s = 0; s < system_.state_count(); ++s) {
        if (system_.moves(s, t)) out.push_back(s);
    }
    return out;
}

const Medium& MediumVerdict::medium() const {
    if (auto* m = std::get_if<Medium>(&value_)) return *m;
    throw std::logic_error("verdict is NotMedium");
}

const Violation& MediumVerdict::witness() const {
    if (auto* v = std::get_if<Violation>(&value_)) return *v;
    throw std::logic_error("verdict is Medium");
}

MediumVerdict is_medium(const TokenSystem& sys) {
    auto pairing = find_reverse_pairing(sys);
    if (auto* v = std::get_if<Violation>(&pairing)) return MediumVerdict(*v);
    const auto& p = std::get<ReversePairing>(pairing);

    auto built = build_graph(sys, p);
    if (auto* v = std::get_if<Violation>(&built)) return MediumVerdict(*v);
    auto& g = std::get<Graph>(built);

    const DistanceTable d = bfs_distances(g);
    for (StateIndex s = 0; s < sys.state_count(); ++s) {
        if (d(0, s) == DistanceTable::unreachable) return MediumVerdict(Violation{Disconnected{0, s}});
    }

    auto pc = partial_cube_by_theta(g);
    if (!pc.partial_cube) return MediumVerdict(Violation{NotPartialCube{*pc.witness}});
    HypercubeEmbedding emb = embed_hypercube(g, d);

    auto forward_token = [&](EdgeIndex e) {
        const auto& ed = g.edge(e);
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            if (sys.next(ed.first, t) == ed.second) return t;
        }
        throw std::logic_error("edge without token");
    };

    // Each class carries exactly one token pair, and each pair exactly one class.
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::size_t> class_of_token(sys.token_count(), none);
    const auto& classes = emb.classes.classes;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const TokenIndex t0 = forward_token(classes[c].front());
        const TokenIndex r0 = *p.reverse(t0);
        for (EdgeIndex e : classes[c]) {
            const TokenIndex t = forward_token(e);
            if (t != t0 && t != r0) {
                return MediumVerdict(Violation{Misaligned{
                    t, e, "edge " + edge_text(g, e) + " shares a Theta class with a different token pair"}});
            }
        }
        if (class_of_token[t0] != none) {
            return MediumVerdict(Violation{Misaligned{
                t0, classes[c].front(), "token pair labels more than one Theta class, again at edge " +
                                            edge_text(g, classes[c].front())}});
        }
        class_of_token[t0] = class_of_token[r0] = c;
    }
    for (TokenIndex t = 0; t < sys.token_count(); ++t) {
        if (class_of_token[t] == none) {
            return MediumVerdict(Violation{Misaligned{t, std::nullopt, "token pair labels no edge"}});
        }
    }

    // Every arc of a token must run from the far side of its class into the
    // side nearer its head.
    std::vector<TokenIndex> token_of_class(classes.size(), none);
    for (TokenIndex t = 0; t < sys.token_count(); ++t) {
        std::vector<Arc> arcs;
        for (StateIndex s = 0; s < sys.state_count(); ++s) {
            if (sys.moves(s, t)) arcs.push_back({s, sys.next(s, t)});
        }
        const auto side = semicube(g, d, arcs.front().head, arcs.front().tail);
        std::vector<bool> inside(sys.state_count(), false);
        for (Vertex v : side) inside[v] = true;
        for (const Arc& a : arcs) {
            if (!inside[a.head] || inside[a.tail]) {
                const EdgeIndex e = g.edge_index(a.tail, a.head);
                return MediumVerdict(Violation{
                    Misaligned{t, e, "arcs cross the Theta class in both directions, e.g. at " + edge_text(g, e)}});
            }
        }
        if (!inside[emb.base]) token_of_class[class_of_token[t]] = t;
    }

    MediumCertificate cert{std::move(emb), std::move(class_of_token), std::move(token_of_class)};
    return MediumVerdict(Medium(sys, p, std::move(g), d, std::move(cert)));
}

Medium require_medium(const TokenSystem& sys) {
    auto v = is_medium(sys);
    if (!v) throw InputError("not a medium: " + describe(sys, v.witness()));
    return v.medium();
}

M1Result oracle_m1(const TokenSystem& sys, const ReversePairing& p) {
    const std::size_t n = sys.state_count();
    const std::size_t k = sys.token_count();
    if (k > 64) throw InputError("oracle_m1 supports at most 64 tokens");

    struct Key {
        StateIndex s;
        std::uint64_t used;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const {
            return std::hash<std::uint64_t>{}(key.used * 0x9E3779B97F4A7C15ULL ^ key.s);
        }
    };

    for (StateIndex src = 0; src < n; ++src) {
        std::vector<bool> reached(n, false);
        std::unordered_set<Key, KeyHash> seen;
        std::vector<Key> stack{{src, 0}};
        seen.insert(stack.back());
        while (!stack.empty()) {
            const Key cur = stack.back();
            stack.pop_back();
            reached[cur.s] = true;
            for (TokenIndex t = 0; t < k; ++t) {
                if (cur.used >> t & 1U) continue;
                const auto r = p.reverse(t);
                if (r && (*r == t || (cur.used >> *r & 1U))) continue;
                if (!sys.moves(cur.s, t)) continue;
                const Key next{sys.next(cur.s, t), cur.used | (std::uint64_t{1} << t)};
                if (seen.insert(next).second) stack.push_back(next);
            }
        }
        for (StateIndex v = 0; v < n; ++v) {
            if (v != src && !reached[v]) return {false, std::pair(src, v)};
        }
    }
    return {true, std::nullopt};
}

std::optional<M2Violation> oracle_m2(const TokenSystem& sys, const ReversePairing& p, std::size_t maxlen) {
    if (maxlen < 2) throw InputError("oracle_m2 needs maxlen >= 2");
    const std::size_t k = sys.token_count();

    // A message is vacuous iff every token pair occurs equally often, every
    // self-reverse token an even number of times, and no reverse-less token
    // occurs. The signature tracks exactly that, so walks can be merged on
    // (state, signature) without losing any shortest violation.
    enum class Kind { positive, negative, self, orphan };
    std::vector<Kind> kind(k);
    std::vector<std::size_t> slot(k);
    for (TokenIndex t = 0; t < k; ++t) {
        const auto r = p.reverse(t);
        if (!r) {
            kind[t] = Kind::orphan;
            slot[t] = t;
        } else if (*r == t) {
            kind[t] = Kind::self;
            slot[t] = t;
        } else {
            kind[t] = t < *r ? Kind::positive : Kind::negative;
            slot[t] = std::min(t, *r);
        }
    }

    struct Node {
        StateIndex state;
        std::vector<int> signature;
        std::size_t parent;
        TokenIndex token;
    };

    std::optional<M2Violation> best;
    for (StateIndex start = 0; start < sys.state_count(); ++start) {
        const std::size_t bound = best ? best->message.size() - 1 : maxlen;
        std::vector<Node> nodes{{start, std::vector<int>(k, 0), SIZE_MAX, 0}};
        std::map<std::pair<StateIndex, std::vector<int>>, bool> seen;
        seen[{start, nodes[0].signature}] = true;
        std::size_t level_begin = 0, level_end = 1;
        for (std::size_t len = 1; len <= bound && level_begin < level_end; ++len) {
            std::optional<std::size_t> hit;
            for (std::size_t i = level_begin; i < level_end && !hit; ++i) {
                for (TokenIndex t = 0; t < k; ++t) {
                    const StateIndex here = nodes[i].state;
                    if (!sys.moves(here, t)) continue;
                    auto sig = nodes[i].signature;
                    switch (kind[t]) {
                        case Kind::positive: ++sig[slot[t]]; break;
                        case Kind::negative: --sig[slot[t]]; break;
                        case Kind::self: sig[slot[t]] ^= 1; break;
                        case Kind::orphan: sig[slot[t]] = 1; break;
                    }
                    const StateIndex there = sys.next(here, t);
                    if (!seen.emplace(std::pair(there, sig), true).second) continue;
                    const bool vacuous = std::all_of(sig.begin(), sig.end(), [](int x) { return x == 0; });
                    nodes.push_back({there, std::move(sig), i, t});
                    if (there == start && !vacuous) {
                        hit = nodes.size() - 1;
                        break;
                    }
                }
            }
            if (hit) {
                Message m;
                for (std::size_t j = *hit; nodes[j].parent != SIZE_MAX; j = nodes[j].parent) {
                    m.push_back(nodes[j].token);
                }
                std::reverse(m.begin(), m.end());
                best = M2Violation{std::move(m), start};
                break;
            }
            level_begin = level_end;
            level_end = nodes.size();
        }
    }
    return best;
}

}  // namespace media
