#include "media/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace media {

namespace {

void require_injective(const std::vector<std::size_t>& v, std::size_t domain, std::size_t codomain,
                       const char* what) {
    if (v.size() != domain) throw InputError(std::string(what) + " map is not total");
    std::vector<bool> hit(codomain, false);
    for (std::size_t x : v) {
        if (x >= codomain) throw InputError(std::string(what) + " map leaves the target system");
        if (hit[x]) throw InputError(std::string(what) + " map is not injective");
        hit[x] = true;
    }
}

}  // namespace

EmbeddingCheck check_embedding(const TokenSystem& from, const TokenSystem& to, const SystemMap& map) {
    require_injective(map.states, from.state_count(), to.state_count(), "state");
    require_injective(map.tokens, from.token_count(), to.token_count(), "token");

    EmbeddingCheck out{true, std::nullopt, std::nullopt};
    // With alpha injective, the biconditional reduces to alpha(S tau) = alpha(S) beta(tau).
    for (StateIndex s = 0; s < from.state_count() && out.holds; ++s) {
        for (TokenIndex t = 0; t < from.token_count(); ++t) {
            if (map.states[from.next(s, t)] != to.next(map.states[s], map.tokens[t])) {
                out.holds = false;
                out.counterexample = std::pair(s, t);
                break;
            }
        }
    }
    if (!out.holds) return out;

    const auto pa = pairing_of(from);
    const auto pb = pairing_of(to);
    if (pa.total() && pb.total()) {
        for (TokenIndex t = 0; t < from.token_count(); ++t) {
            if (map.tokens[*pa.reverse(t)] != *pb.reverse(map.tokens[t])) {
                out.holds = false;
                out.reverse_mismatch = t;
                break;
            }
        }
    }
    return out;
}

SystemMap inverse(const SystemMap& map) {
    auto invert = [](const std::vector<std::size_t>& v) {
        std::vector<std::size_t> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] >= v.size()) throw InputError("map is not a bijection");
            out[v[i]] = i;
        }
        return out;
    };
    return {invert(map.states), invert(map.tokens)};
}

Reduction reduction(const TokenSystem& sys, std::vector<StateIndex> q) {
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end()) throw InputError("reduction states listed twice");
    if (q.size() < 2) throw InputError("a reduction needs at least two states");
    if (q.back() >= sys.state_count()) throw InputError("reduction state outside the system");

    std::vector<std::size_t> local(sys.state_count(), SIZE_MAX);
    for (std::size_t i = 0; i < q.size(); ++i) local[q[i]] = i;

    std::vector<std::string> states;
    for (StateIndex s : q) states.push_back(sys.state_label(s));
    std::vector<std::string> labels;
    std::vector<std::vector<StateIndex>> action;
    std::map<std::vector<StateIndex>, TokenIndex> seen;
    std::vector<std::optional<TokenIndex>> token_of(sys.token_count());
    for (TokenIndex t = 0; t < sys.token_count(); ++t) {
        std::vector<StateIndex> a(q.size());
        bool identity = true;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const StateIndex target = local[sys.next(q[i], t)];
            a[i] = target == SIZE_MAX ? i : target;
            identity = identity && a[i] == i;
        }
        if (identity) continue;
        auto [it, fresh] = seen.emplace(a, labels.size());
        if (fresh) {
            labels.push_back(sys.token_label(t));
            action.push_back(std::move(a));
        }
        token_of[t] = it->second;
    }
    if (labels.empty()) throw EmptyReduction();
    return {TokenSystem(std::move(states), std::move(labels), std::move(action)), std::move(q), std::move(token_of)};
}

bool is_submedium(const Medium& m, const std::vector<StateIndex>& q) {
    try {
        return is_medium(reduction(m.system(), q).system).is_medium();
    } catch (const EmptyReduction&) {
        return false;
    }
}

CanonicalForm canonical_form(const Medium& m) {
    const auto& emb = m.certificate().embedding;
    std::vector<std::string> ground;
    for (std::size_t c = 0; c < emb.dimension(); ++c) ground.push_back(std::to_string(c + 1));
    SetFamily family(std::move(ground), emb.coordinates);
    Medium rep = require_medium(representing_token_system(family));
    return {std::move(family), std::move(rep)};
}

namespace {

std::vector<std::size_t> degree_multiset(const Medium& m) {
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < m.state_count(); ++v) out.push_back(m.graph().neighbors(v).size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> class_size_multiset(const Medium& m) {
    std::vector<std::size_t> out;
    for (const auto& c : m.certificate().embedding.classes.classes) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<SystemMap> is_isomorphic(const Medium& a, const Medium& b) {
    if (a.state_count() != b.state_count() || a.token_count() != b.token_count()) return std::nullopt;
    if (degree_multiset(a) != degree_multiset(b)) return std::nullopt;
    if (class_size_multiset(a) != class_size_multiset(b)) return std::nullopt;

    const auto& sa = a.system();
    const auto& sb = b.system();
    const std::size_t n = a.state_count();
    const std::size_t k = a.token_count();
    constexpr std::size_t none = SIZE_MAX;

    // BFS order of a; every vertex after the first hangs off a mapped parent.
    // A spanning tree crosses every Theta class, so tree arcs fix beta fully.
    std::vector<StateIndex> order{0};
    std::vector<StateIndex> parent(n, none);
    std::vector<TokenIndex> via(n, none);
    {
        std::vector<bool> seen(n, false);
        seen[0] = true;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const StateIndex u = order[i];
            for (Vertex v : a.graph().neighbors(u)) {
                if (seen[v]) continue;
                seen[v] = true;
                parent[v] = u;
                via[v] = *a.token_between(u, v);
                order.push_back(v);
            }
        }
    }

    std::vector<std::size_t> alpha(n, none), beta(k, none);
    std::vector<bool> state_used(n, false), token_used(k, false);
    std::optional<SystemMap> found;

    auto degree = [](const Medium& m, StateIndex s) { return m.graph().neighbors(s).size(); };

    // Mapped neighbours of v must stay adjacent with consistently mapped tokens.
    auto compatible = [&](StateIndex v, StateIndex w) {
        if (state_used[w] || degree(a, v) != degree(b, w)) return false;
        for (Vertex u : a.graph().neighbors(v)) {
            if (alpha[u] == none) continue;
            if (!b.graph().adjacent(w, alpha[u])) return false;
            const TokenIndex t = *a.token_between(v, u);
            if (beta[t] != none && sb.next(w, beta[t]) != alpha[u]) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (found) return;
        if (i == n) {
            SystemMap map{alpha, beta};
            if (check_embedding(sa, sb, map).holds && check_embedding(sb, sa, inverse(map)).holds) found = map;
            return;
        }
        const StateIndex v = order[i];
        const StateIndex from = alpha[parent[v]];
        const TokenIndex t = via[v];
        auto place = [&](StateIndex w) {
            alpha[v] = w;
            state_used[w] = true;
            extend(i + 1);
            state_used[w] = false;
            alpha[v] = none;
        };
        if (beta[t] != none) {
            const StateIndex w = sb.next(from, beta[t]);
            if (w != from && compatible(v, w)) place(w);
            return;
        }
        const TokenIndex rt = a.reverse(t);
        for (TokenIndex u = 0; u < k && !found; ++u) {
            const TokenIndex ru = b.reverse(u);
            if (token_used[u] || token_used[ru] || !sb.moves(from, u)) continue;
            const StateIndex w = sb.next(from, u);
            beta[t] = u;
            beta[rt] = ru;
            token_used[u] = token_used[ru] = true;
            if (compatible(v, w)) place(w);
            token_used[u] = token_used[ru] = false;
            beta[t] = beta[rt] = none;
        }
    };

    for (StateIndex w = 0; w < n && !found; ++w) {
        if (degree(a, 0) != degree(b, w)) continue;
        alpha[0] = w;
        state_used[w] = true;
        extend(1);
        state_used[w] = false;
        alpha[0] = none;
    }
    return found;
}

}  // namespace media
