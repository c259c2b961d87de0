#include "media/structure.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace media {

std::vector<StateIndex> token_semicube(const Medium& m, TokenIndex t) {
    if (t >= m.token_count()) throw InputError("unknown token index");
    const auto arcs = m.arcs_of(t);
    const auto& d = m.distances();
    const Arc a = arcs.front();
    std::vector<StateIndex> out;
    for (StateIndex v = 0; v < m.state_count(); ++v) {
        if (d(v, a.head) < d(v, a.tail)) out.push_back(v);
    }
    return out;
}

std::set<TokenIndex> content_of(const Medium& m, StateIndex s) {
    if (s >= m.state_count()) throw InputError("unknown state index");
    std::set<TokenIndex> out;
    for (TokenIndex t = 0; t < m.token_count(); ++t) {
        const auto w = token_semicube(m, t);
        if (std::binary_search(w.begin(), w.end(), s)) out.insert(t);
    }
    return out;
}

std::vector<std::set<TokenIndex>> content_family(const Medium& m) {
    std::vector<std::set<TokenIndex>> out(m.state_count());
    for (TokenIndex t = 0; t < m.token_count(); ++t) {
        for (StateIndex s : token_semicube(m, t)) out[s].insert(t);
    }
    return out;
}

std::size_t delta(const Medium& m, StateIndex s, StateIndex v) {
    if (s >= m.state_count() || v >= m.state_count()) throw InputError("unknown state index");
    return m.distances()(s, v);
}

namespace {

void enumerate_from(const Medium& m, StateIndex cur, StateIndex target, Message& prefix,
                    std::vector<Message>& out, std::size_t limit) {
    if (cur == target) {
        if (out.size() == limit) throw EnumerationLimitExceeded(limit);
        out.push_back(prefix);
        return;
    }
    const auto& d = m.distances();
    for (TokenIndex t = 0; t < m.token_count(); ++t) {
        const StateIndex next = m.system().next(cur, t);
        if (next == cur || d(next, target) + 1 != d(cur, target)) continue;
        prefix.push_back(t);
        enumerate_from(m, next, target, prefix, out, limit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Message> enumerate_concise(const Medium& m, StateIndex s, StateIndex v, std::size_t limit) {
    if (s >= m.state_count() || v >= m.state_count()) throw InputError("unknown state index");
    if (s == v) throw InputError("no concise message leads from a state to itself");
    std::vector<Message> out;
    Message prefix;
    enumerate_from(m, s, v, prefix, out, limit);
    return out;
}

std::size_t count_concise(const Medium& m, StateIndex s, StateIndex v) {
    if (s >= m.state_count() || v >= m.state_count()) throw InputError("unknown state index");
    if (s == v) throw InputError("no concise message leads from a state to itself");
    const auto& d = m.distances();
    // Geodesic counts towards v, filled in order of increasing distance.
    std::vector<std::size_t> ways(m.state_count(), 0);
    std::vector<StateIndex> order;
    for (StateIndex x = 0; x < m.state_count(); ++x) order.push_back(x);
    std::sort(order.begin(), order.end(), [&](StateIndex a, StateIndex b) { return d(a, v) < d(b, v); });
    ways[v] = 1;
    for (StateIndex x : order) {
        if (x == v) continue;
        for (Vertex y : m.graph().neighbors(x)) {
            if (d(y, v) + 1 == d(x, v)) ways[x] += ways[y];
        }
    }
    return ways[s];
}

bool is_two_gon(const Medium& m, StateIndex s, std::span<const TokenIndex> msg) {
    if (msg.empty() || msg.size() % 2 != 0) return false;
    const std::size_t n = msg.size() / 2;
    const auto first = msg.first(n);
    const auto second = msg.subspan(n);
    if (!is_concise(m.system(), s, first, m.pairing())) return false;
    const StateIndex mid = apply(m.system(), s, first).final_state;
    if (!is_concise(m.system(), mid, second, m.pairing())) return false;
    return apply(m.system(), mid, second).final_state == s;
}

CircuitReport regular_circuit_check(const Medium& m, StateIndex s, const Message& msg) {
    const auto& sys = m.system();
    if (s >= sys.state_count()) throw InputError("unknown state index");
    if (msg.empty() || msg.size() % 2 != 0) throw InputError("circuit must have positive even length");
    if (!is_stepwise_effective(sys, s, msg)) throw InputError("message is not stepwise effective");
    const auto tr = apply(sys, s, msg);
    if (tr.final_state != s) throw InputError("message is not closed");

    const std::size_t n = msg.size() / 2;
    const std::span<const TokenIndex> all(msg);
    CircuitReport r{};
    r.is_two_gon = is_two_gon(m, s, msg);

    r.is_regular = true;
    for (std::size_t i = 0; i < n && r.is_regular; ++i) {
        r.is_regular = is_concise(sys, tr.states[i], all.subspan(i, n), m.pairing());
    }

    r.opposite_reversed = true;
    for (std::size_t i = 0; i < n && r.opposite_reversed; ++i) {
        r.opposite_reversed = msg[i + n] == m.reverse(msg[i]);
    }

    r.rotations_two_gons = true;
    for (std::size_t i = 0; i < msg.size() && r.rotations_two_gons; ++i) {
        Message rotated(msg.begin() + static_cast<std::ptrdiff_t>(i), msg.end());
        rotated.insert(rotated.end(), msg.begin(), msg.begin() + static_cast<std::ptrdiff_t>(i));
        r.rotations_two_gons = is_two_gon(m, tr.states[i], rotated);
    }

    if (r.is_two_gon && !(r.is_regular == r.opposite_reversed && r.is_regular == r.rotations_two_gons)) {
        throw std::logic_error("regular-circuit conditions disagree on a 2-gon " + sys.format(msg));
    }
    return r;
}

namespace {

Message concat(std::initializer_list<Message> parts) {
    Message out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

QuadrilateralReport classify_quadrilateral(const Medium& med, StateIndex s, StateIndex t, StateIndex p,
                                           StateIndex q) {
    const auto& sys = med.system();
    for (StateIndex x : {s, t, p, q}) {
        if (x >= sys.state_count()) throw InputError("unknown state index");
    }
    const std::set<StateIndex> distinct{s, t, p, q};
    if (distinct.size() != 4) throw InputError("quadrilateral needs four distinct states");
    const auto tau = med.token_between(s, t);
    const auto mu = med.token_between(p, q);
    if (!tau || !mu) throw InputError("quadrilateral endpoints must form two token arcs");

    QuadrilateralReport r{};
    r.case_number = classify_edge_pair(med.graph(), med.distances(), {s, t}, {p, q});
    r.tau = *tau;
    r.mu = *mu;
    r.m = enumerate_concise(med, t, q).front();
    r.m_prime = enumerate_concise(med, s, q).front();
    r.n = enumerate_concise(med, s, p).front();
    r.n_prime = enumerate_concise(med, t, p).front();

    const Message tau_m{r.tau}, tau_r{med.reverse(r.tau)}, mu_m{r.mu}, mu_r{med.reverse(r.mu)};
    const auto& pr = med.pairing();
    auto fact = [&](bool ok, const char* what) {
        if (!ok) {
            throw std::logic_error("quadrilateral case " + std::to_string(r.case_number) + ": " + what);
        }
    };
    auto concise_with_content = [&](StateIndex from, const Message& msg, const Message& same_content_as) {
        return is_concise(sys, from, msg, pr) && content(msg) == content(same_content_as);
    };
    const std::size_t lm = r.m.size(), ln = r.n.size(), lmp = r.m_prime.size(), lnp = r.n_prime.size();

    switch (r.case_number) {
        case 1: fact(concise_with_content(t, concat({tau_r, r.n, mu_m}), r.m), "tau~ n mu"); break;
        case 2: fact(concise_with_content(s, concat({tau_m, r.m, mu_r}), r.n), "tau m mu~"); break;
        case 3: fact(concise_with_content(s, concat({tau_m, r.n_prime, mu_m}), r.m_prime), "tau n' mu"); break;
        case 4: fact(concise_with_content(t, concat({tau_r, r.m_prime, mu_r}), r.n_prime), "tau~ m' mu~"); break;
        case 5:
            fact(concise_with_content(s, concat({tau_m, r.n_prime}), r.n), "tau n'");
            fact(concise_with_content(t, concat({r.n_prime, mu_m}), r.m), "n' mu");
            fact(concise_with_content(t, concat({tau_r, r.m_prime}), r.m), "tau~ m'");
            fact(concise_with_content(s, concat({r.m_prime, mu_r}), r.n), "m' mu~");
            fact(r.tau == med.reverse(r.mu), "tau = mu~");
            fact(content(r.m_prime) == content(r.n_prime), "C(m') = C(n')");
            fact(lm + ln == lmp + lnp + 2, "length identity");
            break;
        case 6:
            fact(concise_with_content(s, concat({tau_m, r.m}), r.m_prime), "tau m");
            fact(concise_with_content(s, concat({r.n, mu_m}), r.m_prime), "n mu");
            fact(concise_with_content(t, concat({tau_r, r.n}), r.n_prime), "tau~ n");
            fact(concise_with_content(t, concat({r.m, mu_r}), r.n_prime), "m mu~");
            fact(r.tau == r.mu, "tau = mu");
            fact(content(r.m) == content(r.n), "C(m) = C(n)");
            fact(lm + ln + 2 == lmp + lnp, "length identity");
            break;
        default: throw std::logic_error("unknown case");
    }
    if (r.case_number <= 4) {
        fact(r.tau != r.mu && r.tau != med.reverse(r.mu), "tau differs from mu and mu~");
        fact(content(r.m) != content(r.n), "C(m) != C(n)");
        fact(lm + ln == lmp + lnp, "length identity");
    }
    return r;
}

}  // namespace media
