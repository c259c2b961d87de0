#pragma once

// Embeddings and isomorphisms of token systems, reductions to state subsets,
// and the medium -> partial cube -> representing medium round trip.

#include <optional>
#include <vector>

#include "media/axioms.hpp"
#include "media/family.hpp"

namespace media {

/// alpha on states and beta on tokens, both injective.
struct SystemMap {
    std::vector<StateIndex> states;
    std::vector<TokenIndex> tokens;
};

struct EmbeddingCheck {
    bool holds;
    /// First (state, token) with alpha(S tau) != alpha(S) beta(tau).
    std::optional<std::pair<StateIndex, TokenIndex>> counterexample;
    /// Set when both systems have total pairings and beta(tau~) != beta(tau)~.
    std::optional<TokenIndex> reverse_mismatch;
};

/// S tau = T <=> alpha(S) beta(tau) = alpha(T) for all S, T, tau. Throws
/// InputError on partial or non-injective maps.
EmbeddingCheck check_embedding(const TokenSystem& from, const TokenSystem& to, const SystemMap& map);

SystemMap inverse(const SystemMap& map);

class EmptyReduction : public InputError {
public:
    EmptyReduction() : InputError("every token reduces to the identity; the reduction is not a token system") {}
};

struct Reduction {
    TokenSystem system;
    std::vector<StateIndex> states;                   // reduced state -> source state
    std::vector<std::optional<TokenIndex>> token_of;  // source token -> reduced token
};

/// Restrict every token to q (moves leaving q become fixed points), drop
/// identities and merge equal reductions, keeping the first source label.
/// States keep source order. Throws EmptyReduction if no token survives.
Reduction reduction(const TokenSystem& sys, std::vector<StateIndex> q);

/// The reduction exists and is itself a medium.
bool is_submedium(const Medium& m, const std::vector<StateIndex>& q);

/// Embedding coordinates as a family over class labels "1", "2", ...
/// (members in state order) together with its representing medium.
struct CanonicalForm {
    SetFamily family;
    Medium representing;
};

CanonicalForm canonical_form(const Medium& m);

/// An isomorphism a -> b if one exists. Candidates are re-verified with
/// check_embedding in both directions before being returned.
std::optional<SystemMap> is_isomorphic(const Medium& a, const Medium& b);

}  // namespace media
