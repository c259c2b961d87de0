#include "media/token_system.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace media {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw InputError(std::string("duplicate ") + what + " label '" + l + "'");
        }
    }
}

}  // namespace

TokenSystem::TokenSystem(std::vector<std::string> states, std::vector<std::string> tokens,
                         std::vector<std::vector<StateIndex>> action)
    : states_(std::move(states)), tokens_(std::move(tokens)), action_(std::move(action)) {
    if (states_.size() < 2) {
        throw InputError("a token system needs at least two states");
    }
    if (tokens_.empty()) {
        throw InputError("a token system needs at least one token");
    }
    if (action_.size() != tokens_.size()) {
        throw InputError("one action per token is required");
    }
    require_unique(states_, "state");
    require_unique(tokens_, "token");

    std::map<std::vector<StateIndex>, TokenIndex> seen;
    for (TokenIndex t = 0; t < tokens_.size(); ++t) {
        const auto& a = action_[t];
        if (a.size() != states_.size()) {
            throw InputError("action of token '" + tokens_[t] + "' is not total");
        }
        bool identity = true;
        for (StateIndex s = 0; s < a.size(); ++s) {
            if (a[s] >= states_.size()) {
                throw InputError("token '" + tokens_[t] + "' maps to an unknown state");
            }
            identity = identity && a[s] == s;
        }
        if (identity) {
            throw InputError("token '" + tokens_[t] + "' acts as the identity");
        }
        auto [it, fresh] = seen.emplace(a, t);
        if (!fresh) {
            throw InputError("tokens '" + tokens_[it->second] + "' and '" + tokens_[t] +
                             "' define the same transformation");
        }
    }
}

TokenSystem TokenSystem::from_sparse(std::vector<std::string> states,
                                     const std::vector<SparseToken>& tokens) {
    std::unordered_map<std::string, StateIndex> index;
    for (StateIndex s = 0; s < states.size(); ++s) index.emplace(states[s], s);
    auto lookup = [&](const std::string& label, const std::string& token) {
        auto it = index.find(label);
        if (it == index.end()) {
            throw InputError("token '" + token + "' refers to unknown state '" + label + "'");
        }
        return it->second;
    };

    std::vector<std::string> labels;
    std::vector<std::vector<StateIndex>> action;
    for (const auto& tok : tokens) {
        std::vector<StateIndex> a(states.size());
        for (StateIndex s = 0; s < a.size(); ++s) a[s] = s;
        std::vector<bool> assigned(states.size(), false);
        for (const auto& [from, to] : tok.moves) {
            StateIndex f = lookup(from, tok.label);
            StateIndex g = lookup(to, tok.label);
            if (assigned[f]) {
                throw InputError("token '" + tok.label + "' maps state '" + from + "' twice");
            }
            assigned[f] = true;
            a[f] = g;
        }
        labels.push_back(tok.label);
        action.push_back(std::move(a));
    }
    return TokenSystem(std::move(states), std::move(labels), std::move(action));
}

std::optional<StateIndex> TokenSystem::find_state(const std::string& label) const {
    auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end()) return std::nullopt;
    return static_cast<StateIndex>(it - states_.begin());
}

std::optional<TokenIndex> TokenSystem::find_token(const std::string& label) const {
    auto it = std::find(tokens_.begin(), tokens_.end(), label);
    if (it == tokens_.end()) return std::nullopt;
    return static_cast<TokenIndex>(it - tokens_.begin());
}

StateIndex TokenSystem::state(const std::string& label) const {
    if (auto s = find_state(label)) return *s;
    throw InputError("unknown state '" + label + "'");
}

TokenIndex TokenSystem::token(const std::string& label) const {
    if (auto t = find_token(label)) return *t;
    throw InputError("unknown token '" + label + "'");
}

Message TokenSystem::message(std::initializer_list<std::string> labels) const {
    Message m;
    for (const auto& l : labels) m.push_back(token(l));
    return m;
}

std::string TokenSystem::format(const Message& m) const {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ' ';
        out += token_label(m[i]);
    }
    return out + "]";
}

bool equal_by_labels(const TokenSystem& a, const TokenSystem& b) {
    if (a.state_count() != b.state_count() || a.token_count() != b.token_count()) return false;
    for (TokenIndex t = 0; t < a.token_count(); ++t) {
        auto u = b.find_token(a.token_label(t));
        if (!u) return false;
        for (StateIndex s = 0; s < a.state_count(); ++s) {
            auto bs = b.find_state(a.state_label(s));
            if (!bs) return false;
            if (b.state_label(b.next(*bs, *u)) != a.state_label(a.next(s, t))) return false;
        }
    }
    return true;
}

Trajectory apply(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m) {
    if (s >= sys.state_count()) throw InputError("unknown state index");
    Trajectory tr{s, {s}};
    tr.states.reserve(m.size() + 1);
    for (TokenIndex t : m) {
        if (t >= sys.token_count()) throw InputError("unknown token index");
        tr.final_state = sys.next(tr.final_state, t);
        tr.states.push_back(tr.final_state);
    }
    return tr;
}

std::optional<TokenIndex> reverse_of(const TokenSystem& sys, TokenIndex t) {
    if (t >= sys.token_count()) throw InputError("unknown token index");
    const auto& tau = sys.action(t);
    for (TokenIndex c = 0; c < sys.token_count(); ++c) {
        const auto& mu = sys.action(c);
        bool ok = true;
        for (StateIndex s = 0; s < sys.state_count() && ok; ++s) {
            // S tau = V (V != S) forces V mu = S, and V mu = S forces S tau = V.
            if (tau[s] != s && mu[tau[s]] != s) ok = false;
            if (mu[s] != s && tau[mu[s]] != s) ok = false;
        }
        if (ok) return c;
    }
    return std::nullopt;
}

ReversePairing::ReversePairing(std::vector<std::optional<TokenIndex>> partner)
    : partner_(std::move(partner)) {
    for (TokenIndex t = 0; t < partner_.size(); ++t) {
        if (partner_[t]) {
            if (*partner_[t] >= partner_.size() || partner_[*partner_[t]] != t) {
                throw InputError("reverse pairing is not an involution");
            }
        }
    }
}

bool ReversePairing::total() const {
    return std::all_of(partner_.begin(), partner_.end(), [](const auto& p) { return p.has_value(); });
}

bool ReversePairing::fixed_point_free() const {
    for (TokenIndex t = 0; t < partner_.size(); ++t) {
        if (partner_[t] == t) return false;
    }
    return true;
}

ReversePairing pairing_of(const TokenSystem& sys) {
    std::vector<std::optional<TokenIndex>> partner(sys.token_count());
    for (TokenIndex t = 0; t < sys.token_count(); ++t) partner[t] = reverse_of(sys, t);
    return ReversePairing(std::move(partner));
}

std::set<TokenIndex> content(std::span<const TokenIndex> m) {
    return std::set<TokenIndex>(m.begin(), m.end());
}

bool is_consistent(std::span<const TokenIndex> m, const ReversePairing& p) {
    const auto c = content(m);
    for (TokenIndex t : c) {
        if (auto r = p.reverse(t); r && c.count(*r)) return false;
    }
    return true;
}

bool is_vacuous(std::span<const TokenIndex> m, const ReversePairing& p) {
    std::map<TokenIndex, std::size_t> count;
    for (TokenIndex t : m) ++count[t];
    for (const auto& [t, n] : count) {
        auto r = p.reverse(t);
        if (!r) return false;
        if (*r == t) {
            if (n % 2 != 0) return false;
        } else {
            auto it = count.find(*r);
            if (it == count.end() || it->second != n) return false;
        }
    }
    return true;
}

bool is_stepwise_effective(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m) {
    const auto tr = apply(sys, s, m);
    for (std::size_t k = 1; k < tr.states.size(); ++k) {
        if (tr.states[k] == tr.states[k - 1]) return false;
    }
    return true;
}

bool is_concise(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m,
                const ReversePairing& p) {
    return content(m).size() == m.size() && is_consistent(m, p) && is_stepwise_effective(sys, s, m);
}

bool is_closed(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m) {
    return is_stepwise_effective(sys, s, m) && apply(sys, s, m).final_state == s;
}

std::optional<Message> reverse_message(std::span<const TokenIndex> m, const ReversePairing& p) {
    Message out;
    out.reserve(m.size());
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        auto r = p.reverse(*it);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

}  // namespace media
