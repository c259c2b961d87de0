#include "media/family.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace media {

SetFamily::SetFamily(std::vector<std::string> ground, std::vector<ElementSet> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    {
        std::set<std::string> seen;
        for (const auto& g : ground_) {
            if (!seen.insert(g).second) throw InputError("duplicate ground element '" + g + "'");
        }
    }
    if (members_.size() < 2) throw InputError("a set family needs at least two members");
    std::set<ElementSet> seen;
    for (auto& m : members_) {
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end()) {
            throw InputError("member lists an element twice");
        }
        if (!m.empty() && m.back() >= ground_.size()) throw InputError("member element outside the ground set");
        if (!seen.insert(m).second) throw InputError("duplicate member " + format(m));
    }
}

SetFamily SetFamily::from_labels(std::vector<std::string> ground,
                                 const std::vector<std::vector<std::string>>& members) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ground.size(); ++i) index.emplace(ground[i], i);
    std::vector<ElementSet> sets;
    for (const auto& m : members) {
        ElementSet s;
        for (const auto& x : m) {
            auto it = index.find(x);
            if (it == index.end()) throw InputError("element '" + x + "' is not in the ground set");
            s.push_back(it->second);
        }
        sets.push_back(std::move(s));
    }
    return SetFamily(std::move(ground), std::move(sets));
}

std::optional<std::size_t> SetFamily::find(const ElementSet& s) const {
    auto it = std::find(members_.begin(), members_.end(), s);
    if (it == members_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

std::string SetFamily::format(const ElementSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s[i] < ground_.size() ? ground_[s[i]] : "?";
    }
    return out + "}";
}

std::string SetFamily::member_label(std::size_t i) const { return format(members_.at(i)); }

std::size_t hamming(const ElementSet& a, const ElementSet& b) { return symmetric_difference_size(a, b); }

namespace {

std::vector<std::vector<std::size_t>> hamming_graph(const SetFamily& f) {
    std::vector<std::vector<std::size_t>> adj(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (hamming(f.member(i), f.member(j)) == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

constexpr std::size_t unreached = SIZE_MAX;

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t src,
                             std::vector<std::size_t>* parent = nullptr) {
    std::vector<std::size_t> d(adj.size(), unreached);
    if (parent) parent->assign(adj.size(), unreached);
    d[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj[u]) {
            if (d[v] == unreached) {
                d[v] = d[u] + 1;
                if (parent) (*parent)[v] = u;
                queue.push_back(v);
            }
        }
    }
    return d;
}

}  // namespace

bool is_connected_family(const SetFamily& f) {
    const auto d = bfs(hamming_graph(f), 0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == unreached; });
}

WellGradedCheck is_well_graded(const SetFamily& f) {
    const auto adj = hamming_graph(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto d = bfs(adj, i);
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (d[j] != hamming(f.member(i), f.member(j))) return {false, std::pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

std::optional<std::vector<std::size_t>> family_chain(const SetFamily& f, std::size_t i, std::size_t j) {
    if (i >= f.size() || j >= f.size()) throw InputError("member index out of range");
    std::vector<std::size_t> parent;
    const auto d = bfs(hamming_graph(f), i, &parent);
    if (d[j] == unreached) return std::nullopt;
    std::vector<std::size_t> chain{j};
    while (chain.back() != i) chain.push_back(parent[chain.back()]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

TokenSystem representing_token_system(const SetFamily& f) {
    std::vector<bool> in_union(f.ground().size(), false);
    std::vector<std::size_t> occurrences(f.ground().size(), 0);
    for (const auto& m : f.members()) {
        for (std::size_t x : m) {
            in_union[x] = true;
            ++occurrences[x];
        }
    }
    std::vector<std::string> states;
    for (std::size_t i = 0; i < f.size(); ++i) states.push_back(f.member_label(i));

    std::vector<std::string> labels;
    std::vector<std::vector<StateIndex>> action;
    for (std::size_t x = 0; x < f.ground().size(); ++x) {
        if (!in_union[x] || occurrences[x] == f.size()) continue;
        std::vector<StateIndex> add(f.size()), remove(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& s = f.member(i);
            add[i] = remove[i] = i;
            ElementSet t = s;
            auto pos = std::lower_bound(t.begin(), t.end(), x);
            if (pos != t.end() && *pos == x) {
                t.erase(pos);
                if (auto k = f.find(t)) remove[i] = *k;
            } else {
                t.insert(pos, x);
                if (auto k = f.find(t)) add[i] = *k;
            }
        }
        for (auto* a : {&add, &remove}) {
            bool identity = true;
            for (std::size_t i = 0; i < a->size(); ++i) identity = identity && (*a)[i] == i;
            if (identity) {
                throw InputError("token for element '" + f.ground()[x] + "' acts as the identity");
            }
        }
        labels.push_back("+" + f.ground()[x]);
        action.push_back(std::move(add));
        labels.push_back("-" + f.ground()[x]);
        action.push_back(std::move(remove));
    }
    return TokenSystem(std::move(states), std::move(labels), std::move(action));
}

bool is_complete_medium(const Medium& m) {
    const auto& sys = m.system();
    for (StateIndex s = 0; s < sys.state_count(); ++s) {
        for (TokenIndex t = 0; t < sys.token_count(); ++t) {
            if (!sys.moves(s, t) && !sys.moves(s, m.reverse(t))) return false;
        }
    }
    return true;
}

std::vector<std::string> default_ground(std::size_t n) {
    std::vector<std::string> g;
    for (std::size_t i = 0; i < n; ++i) {
        g.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
    }
    return g;
}

SetFamily hypercube_family(std::size_t dimension) {
    if (dimension < 1 || dimension > 16) throw InputError("hypercube dimension must be in [1, 16]");
    std::vector<ElementSet> members;
    for (std::uint32_t mask = 0; mask < (1U << dimension); ++mask) {
        ElementSet s;
        for (std::size_t x = 0; x < dimension; ++x) {
            if (mask >> x & 1U) s.push_back(x);
        }
        members.push_back(std::move(s));
    }
    return SetFamily(default_ground(dimension), std::move(members));
}

SetFamily cycle_family(std::size_t states) {
    if (states < 4 || states % 2 != 0) throw InputError("cycle length must be even and at least 4");
    const std::size_t k = states / 2;
    std::vector<ElementSet> members{{}};
    for (std::size_t x = 0; x < k; ++x) {
        ElementSet s = members.back();
        s.push_back(x);
        members.push_back(std::move(s));
    }
    for (std::size_t x = 0; x + 1 < k; ++x) {
        ElementSet s = members.back();
        s.erase(std::find(s.begin(), s.end(), x));
        members.push_back(std::move(s));
    }
    return SetFamily(default_ground(k), std::move(members));
}

SetFamily path_family(std::size_t states) {
    if (states < 2) throw InputError("a path needs at least two states");
    std::vector<ElementSet> members{{}};
    for (std::size_t x = 0; x + 1 < states; ++x) {
        ElementSet s = members.back();
        s.push_back(x);
        members.push_back(std::move(s));
    }
    return SetFamily(default_ground(states - 1), std::move(members));
}

namespace {

ElementSet random_subset(std::size_t ground, std::mt19937_64& rng) {
    ElementSet s;
    for (std::size_t x = 0; x < ground; ++x) {
        if (rng() & 1U) s.push_back(x);
    }
    return s;
}

ElementSet flip(ElementSet s, std::size_t x) {
    auto pos = std::lower_bound(s.begin(), s.end(), x);
    if (pos != s.end() && *pos == x) {
        s.erase(pos);
    } else {
        s.insert(pos, x);
    }
    return s;
}

void check_size(std::size_t ground, std::size_t size) {
    if (ground < 1 || ground > 20) throw InputError("ground size must be in [1, 20]");
    if (size < 2 || size > (std::size_t{1} << ground)) {
        throw InputError("family size must be in [2, 2^ground]");
    }
}

}  // namespace

SetFamily random_family(std::size_t ground, std::size_t size, double neighbour_probability, std::mt19937_64& rng) {
    check_size(ground, size);
    std::vector<ElementSet> members{random_subset(ground, rng)};
    std::set<ElementSet> seen{members.front()};
    std::bernoulli_distribution neighbour(neighbour_probability);
    while (members.size() < size) {
        ElementSet candidate;
        if (neighbour(rng)) {
            const auto& base = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
            candidate = flip(base, std::uniform_int_distribution<std::size_t>(0, ground - 1)(rng));
        } else {
            candidate = random_subset(ground, rng);
        }
        if (seen.insert(candidate).second) members.push_back(std::move(candidate));
    }
    return SetFamily(default_ground(ground), std::move(members));
}

SetFamily random_wg_family(std::size_t ground, std::size_t size, std::uint64_t seed) {
    check_size(ground, size);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<ElementSet> members{random_subset(ground, rng)};
        std::set<ElementSet> seen{members.front()};
        while (members.size() < size) {
            std::vector<ElementSet> candidates;
            for (const auto& m : members) {
                for (std::size_t x = 0; x < ground; ++x) {
                    auto c = flip(m, x);
                    if (!seen.count(c)) candidates.push_back(std::move(c));
                }
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            std::shuffle(candidates.begin(), candidates.end(), rng);

            bool grown = false;
            for (auto& c : candidates) {
                // Only distances to the new member can break isometry.
                std::vector<std::size_t> dist(members.size() + 1, unreached);
                members.push_back(c);
                const std::size_t src = members.size() - 1;
                dist[src] = 0;
                std::deque<std::size_t> queue{src};
                while (!queue.empty()) {
                    std::size_t u = queue.front();
                    queue.pop_front();
                    for (std::size_t v = 0; v < members.size(); ++v) {
                        if (dist[v] == unreached && hamming(members[u], members[v]) == 1) {
                            dist[v] = dist[u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
                bool ok = true;
                for (std::size_t v = 0; v < src && ok; ++v) ok = dist[v] == hamming(members[v], c);
                if (ok) {
                    seen.insert(c);
                    grown = true;
                    break;
                }
                members.pop_back();
            }
            if (!grown) break;
        }
        if (members.size() == size) return SetFamily(default_ground(ground), std::move(members));
    }
    throw InputError("could not grow a well-graded family of the requested size");
}

}  // namespace media
