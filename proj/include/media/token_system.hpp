#pragma once

// Token systems and the message algebra: application of token strings,
// reverses, content and the consistent / vacuous / stepwise-effective /
// concise predicates.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "media/error.hpp"

namespace media {

using StateIndex = std::size_t;
using TokenIndex = std::size_t;

/// A message is a finite string of tokens, applied left to right.
using Message = std::vector<TokenIndex>;

/// Sparse description of one token: only the states it moves are listed.
struct SparseToken {
    std::string label;
    std::vector<std::pair<std::string, std::string>> moves;
};

/// A finite set of states together with a set of non-identity
/// transformations of it. Immutable once constructed.
///
/// Construction rejects fewer than two states, an empty token set, duplicate
/// labels, identity tokens, and tokens whose action duplicates another
/// token's (the token set is a set of transformations).
class TokenSystem {
public:
    TokenSystem(std::vector<std::string> states, std::vector<std::string> tokens,
                std::vector<std::vector<StateIndex>> action);

    /// Completes sparse maps to total actions; unlisted states are fixed.
    static TokenSystem from_sparse(std::vector<std::string> states,
                                   const std::vector<SparseToken>& tokens);

    std::size_t state_count() const { return states_.size(); }
    std::size_t token_count() const { return tokens_.size(); }

    const std::string& state_label(StateIndex s) const { return states_.at(s); }
    const std::string& token_label(TokenIndex t) const { return tokens_.at(t); }
    const std::vector<std::string>& state_labels() const { return states_; }
    const std::vector<std::string>& token_labels() const { return tokens_; }

    std::optional<StateIndex> find_state(const std::string& label) const;
    std::optional<TokenIndex> find_token(const std::string& label) const;
    /// Throws InputError naming the label when it is unknown.
    StateIndex state(const std::string& label) const;
    TokenIndex token(const std::string& label) const;

    /// S tau.
    StateIndex next(StateIndex s, TokenIndex t) const { return action_[t][s]; }
    bool moves(StateIndex s, TokenIndex t) const { return action_[t][s] != s; }

    const std::vector<StateIndex>& action(TokenIndex t) const { return action_.at(t); }

    /// Message from token labels; throws on unknown labels.
    Message message(std::initializer_list<std::string> labels) const;
    std::string format(const Message& m) const;

    friend bool operator==(const TokenSystem&, const TokenSystem&) = default;

private:
    std::vector<std::string> states_;
    std::vector<std::string> tokens_;
    std::vector<std::vector<StateIndex>> action_;  // action_[token][state]
};

/// True when both systems have the same state labels, token labels and
/// actions, irrespective of declaration order.
bool equal_by_labels(const TokenSystem& a, const TokenSystem& b);

struct Trajectory {
    StateIndex final_state;
    std::vector<StateIndex> states;  // length ell(m) + 1, starts at the source
};

Trajectory apply(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m);

/// The unique token mu with S tau = V <=> V mu = S for all distinct S, V.
std::optional<TokenIndex> reverse_of(const TokenSystem& sys, TokenIndex t);

/// Partial involution on tokens. A token may be its own reverse only in raw
/// token systems; media never contain one.
class ReversePairing {
public:
    ReversePairing() = default;
    explicit ReversePairing(std::vector<std::optional<TokenIndex>> partner);

    std::optional<TokenIndex> reverse(TokenIndex t) const { return partner_.at(t); }
    bool has_reverse(TokenIndex t) const { return partner_.at(t).has_value(); }
    bool total() const;
    bool fixed_point_free() const;
    std::size_t size() const { return partner_.size(); }

    friend bool operator==(const ReversePairing&, const ReversePairing&) = default;

private:
    std::vector<std::optional<TokenIndex>> partner_;
};

/// reverse_of for every token.
ReversePairing pairing_of(const TokenSystem& sys);

std::set<TokenIndex> content(std::span<const TokenIndex> m);

bool is_consistent(std::span<const TokenIndex> m, const ReversePairing& p);
bool is_vacuous(std::span<const TokenIndex> m, const ReversePairing& p);
bool is_stepwise_effective(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m);
bool is_concise(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m,
                const ReversePairing& p);
/// Stepwise effective and returning to s.
bool is_closed(const TokenSystem& sys, StateIndex s, std::span<const TokenIndex> m);

/// tilde(tau_1 ... tau_n) = tilde(tau_n) ... tilde(tau_1); nullopt if some
/// token has no reverse.
std::optional<Message> reverse_message(std::span<const TokenIndex> m, const ReversePairing& p);

}  // namespace media
