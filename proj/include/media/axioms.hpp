#pragma once

// Deciding whether a token system is a medium, plus brute-force oracles for
// the two axioms (concise reachability; closed messages are vacuous).

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "media/graph.hpp"
#include "media/token_system.hpp"

namespace media {

struct MissingReverse {
    TokenIndex token;
};
struct SelfReverse {
    TokenIndex token;
};
/// Two distinct tokens both move `from` to `to`.
struct DuplicateArcToken {
    StateIndex from;
    StateIndex to;
    TokenIndex first;
    TokenIndex second;
};
struct Disconnected {
    StateIndex from;
    StateIndex to;
};
struct NotPartialCube {
    GraphWitness witness;
};
/// Token pairs and Theta classes do not line up at `edge`: a class carries
/// mixed labels, a token pair spans two classes, or a token crosses its
/// class in the wrong direction. `edge` is absent only when a token pair
/// labels no edge at all.
struct Misaligned {
    TokenIndex token;
    std::optional<EdgeIndex> edge;
    std::string reason;
};

using Violation = std::variant<MissingReverse, SelfReverse, DuplicateArcToken, Disconnected,
                               NotPartialCube, Misaligned>;

std::string describe(const TokenSystem& sys, const Violation& v);

/// Total, fixed-point-free pairing, or the first token (in declaration order)
/// lacking a reverse or being its own reverse.
std::variant<ReversePairing, Violation> find_reverse_pairing(const TokenSystem& sys);

/// Graph on the states whose edges are the adjacent pairs, labelled with
/// their token pair. Vertices keep state indices.
std::variant<Graph, Violation> build_graph(const TokenSystem& sys, const ReversePairing& p);

/// Embedding of the graph plus the token-pair <-> Theta-class bijection.
struct MediumCertificate {
    HypercubeEmbedding embedding;
    std::vector<std::size_t> class_of_token;
    std::vector<TokenIndex> token_of_class;  // the token moving away from the base side
};

class MediumVerdict;
MediumVerdict is_medium(const TokenSystem& sys);

/// A token system verified to be a medium, with its derived structure.
class Medium {
public:
    const TokenSystem& system() const { return system_; }
    const ReversePairing& pairing() const { return pairing_; }
    const Graph& graph() const { return graph_; }
    const DistanceTable& distances() const { return distances_; }
    const MediumCertificate& certificate() const { return certificate_; }

    TokenIndex reverse(TokenIndex t) const { return *pairing_.reverse(t); }
    std::size_t state_count() const { return system_.state_count(); }
    std::size_t token_count() const { return system_.token_count(); }

    /// The token moving s to the adjacent state v, if any.
    std::optional<TokenIndex> token_between(StateIndex s, StateIndex v) const;
    /// Every arc (S, S tau) with S tau != S, in state order.
    std::vector<Arc> arcs_of(TokenIndex t) const;
    /// States on which t is effective.
    std::vector<StateIndex> effective_states(TokenIndex t) const;

private:
    friend class MediumVerdict;
    friend MediumVerdict is_medium(const TokenSystem& sys);
    Medium(TokenSystem sys, ReversePairing p, Graph g, DistanceTable d, MediumCertificate c);

    TokenSystem system_;
    ReversePairing pairing_;
    Graph graph_;
    DistanceTable distances_;
    MediumCertificate certificate_;
};

class MediumVerdict {
public:
    explicit MediumVerdict(Medium m) : value_(std::move(m)) {}
    explicit MediumVerdict(Violation v) : value_(std::move(v)) {}

    bool is_medium() const { return std::holds_alternative<Medium>(value_); }
    explicit operator bool() const { return is_medium(); }
    const Medium& medium() const;
    const Violation& witness() const;

private:
    std::variant<Medium, Violation> value_;
};

/// Rejection order: reverses, arcs, connectivity, partial cube, alignment.
/// The witness reports the first failure.
MediumVerdict is_medium(const TokenSystem& sys);

/// Shorthand for verified construction; throws InputError with the witness.
Medium require_medium(const TokenSystem& sys);

struct M1Result {
    bool holds;
    std::optional<std::pair<StateIndex, StateIndex>> unreachable;
};

/// Exhaustive search for a concise message between every ordered pair of
/// distinct states. Supports up to 64 tokens.
M1Result oracle_m1(const TokenSystem& sys, const ReversePairing& p);

struct M2Violation {
    Message message;
    StateIndex state;
};

/// Shortest closed, non-vacuous message of length <= maxlen, if any.
/// Refutation only: std::nullopt means no violation up to the bound.
std::optional<M2Violation> oracle_m2(const TokenSystem& sys, const ReversePairing& p, std::size_t maxlen);

inline std::size_t default_m2_bound(const TokenSystem& sys) { return 2 * sys.state_count(); }

}  // namespace media
