#pragma once

// Contents and semicubes of media, the state metric, concise-message
// enumeration, circuit analysis and quadrilateral classification.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "media/axioms.hpp"

namespace media {

/// States closer to the head than to the tail of any arc of t.
std::vector<StateIndex> token_semicube(const Medium& m, TokenIndex t);

/// {t : s in token_semicube(m, t)}.
std::set<TokenIndex> content_of(const Medium& m, StateIndex s);

/// content_of for every state, computing each semicube once.
std::vector<std::set<TokenIndex>> content_family(const Medium& m);

/// Length of any concise message from s to v.
std::size_t delta(const Medium& m, StateIndex s, StateIndex v);

class EnumerationLimitExceeded : public std::runtime_error {
public:
    explicit EnumerationLimitExceeded(std::size_t limit)
        : std::runtime_error("more than " + std::to_string(limit) + " concise messages"), limit(limit) {}
    std::size_t limit;
};

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

/// Every concise message from s to v, in lexicographic token order.
/// Throws InputError when s == v, EnumerationLimitExceeded beyond `limit`.
std::vector<Message> enumerate_concise(const Medium& m, StateIndex s, StateIndex v,
                                       std::size_t limit = default_enumeration_limit);

/// Number of concise messages from s to v without materialising them.
std::size_t count_concise(const Medium& m, StateIndex s, StateIndex v);

struct CircuitReport {
    bool is_two_gon;
    bool is_regular;
    bool opposite_reversed;
    bool rotations_two_gons;  // every rotation is a 2-gon for its start state
};

/// 2-gon: first half concise for s, second half concise from the midpoint.
bool is_two_gon(const Medium& m, StateIndex s, std::span<const TokenIndex> msg);

/// msg must be non-empty, of even length, closed and stepwise effective for s
/// (InputError otherwise). For 2-gons, the three equivalent conditions are
/// checked to coincide (std::logic_error otherwise).
CircuitReport regular_circuit_check(const Medium& m, StateIndex s, const Message& msg);

/// Configuration of two arcs s -tau-> t and p -mu-> q together with concise
/// messages m: t -> q, m': s -> q, n: s -> p, n': t -> p.
struct QuadrilateralReport {
    int case_number;
    TokenIndex tau;
    TokenIndex mu;
    Message m;
    Message m_prime;
    Message n;
    Message n_prime;
};

/// Delegates the case to classify_edge_pair, then verifies the message-level
/// facts of that case and throws std::logic_error if any fails. Throws
/// InputError unless the four states are distinct and form two arcs.
QuadrilateralReport classify_quadrilateral(const Medium& m, StateIndex s, StateIndex t, StateIndex p,
                                           StateIndex q);

}  // namespace media
