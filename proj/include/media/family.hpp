#pragma once

// Families of subsets of a finite ground set: connectivity, well-gradedness,
// the representing token system, completeness, and seeded generators.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "media/axioms.hpp"
#include "media/token_system.hpp"

namespace media {

/// Sorted, duplicate-free indices into a ground set.
using ElementSet = std::vector<std::size_t>;

class SetFamily {
public:
    /// Members are normalised (sorted); throws on fewer than two members,
    /// duplicates, or elements outside the ground set.
    SetFamily(std::vector<std::string> ground, std::vector<ElementSet> members);

    /// Build from element labels.
    static SetFamily from_labels(std::vector<std::string> ground,
                                 const std::vector<std::vector<std::string>>& members);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<ElementSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const ElementSet& member(std::size_t i) const { return members_.at(i); }
    std::optional<std::size_t> find(const ElementSet& s) const;

    /// "{x,y}" with elements in ground order; "{}" for the empty set.
    std::string member_label(std::size_t i) const;
    std::string format(const ElementSet& s) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<std::string> ground_;
    std::vector<ElementSet> members_;
};

std::size_t hamming(const ElementSet& a, const ElementSet& b);

bool is_connected_family(const SetFamily& f);

struct WellGradedCheck {
    bool well_graded;
    /// First member pair (in member order) whose distance inside the family
    /// differs from their symmetric-difference size.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

WellGradedCheck is_well_graded(const SetFamily& f);

/// A shortest chain of single-element steps inside the family from member i
/// to member j (member indices), or std::nullopt if none exists.
std::optional<std::vector<std::size_t>> family_chain(const SetFamily& f, std::size_t i, std::size_t j);

/// States are the members (labelled by member_label); for each element in
/// union minus intersection, tokens "+x" (add x when the result is a member)
/// and "-x" (remove x likewise). Throws InputError naming x when one of them
/// acts as the identity.
TokenSystem representing_token_system(const SetFamily& f);

/// For every state and token pair, one token of the pair is effective.
bool is_complete_medium(const Medium& m);

/// Ground labels "a", "b", ... (then "e26", "e27", ...).
std::vector<std::string> default_ground(std::size_t n);

SetFamily hypercube_family(std::size_t dimension);
/// Cycle on 2k states: add elements 1..k in turn, then remove them in turn.
SetFamily cycle_family(std::size_t states);
/// Path on n states: {}, {a}, {a,b}, ...
SetFamily path_family(std::size_t states);

/// Starts from a random subset; then repeatedly, with probability
/// `neighbour_probability`, adds a single-element neighbour of a random
/// member, otherwise a uniformly random subset. Yields both well-graded and
/// non-well-graded families.
SetFamily random_family(std::size_t ground, std::size_t size, double neighbour_probability, std::mt19937_64& rng);

/// Grows a well-graded family one neighbour at a time, keeping only
/// extensions that stay well-graded. Deterministic for a given seed.
SetFamily random_wg_family(std::size_t ground, std::size_t size, std::uint64_t seed);

}  // namespace media
