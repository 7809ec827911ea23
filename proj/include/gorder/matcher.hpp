#pragma once

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "gorder/order.hpp"

namespace gorder {

/// A strict order used as a search pattern. Asymmetry and transitivity are enforced; positive
/// antisymmetry is not, since an induced suborder can lack it on its own.
class Pattern {
public:
    /// Returns the pattern, or a report listing asymmetry and transitivity violations.
    static std::variant<Pattern, ViolationReport> from_relation(Carrier carrier, StrictRelation lt);
    static Pattern from_order(const OrderedType& order);

    static Pattern chain(std::size_t n);
    static Pattern antichain(std::size_t n);

    std::size_t size() const { return carrier_.size(); }
    const Carrier& carrier() const { return carrier_; }
    const StrictRelation& relation() const { return lt_; }
    const BitMatrix& down_matrix() const { return down_; }
    bool less(Index i, Index j) const { return lt_.less(i, j); }

private:
    Pattern(Carrier carrier, StrictRelation lt);

    Carrier carrier_;
    StrictRelation lt_;
    BitMatrix down_;
};

/// map[p] is the ground image of pattern element p.
struct Embedding {
    std::vector<Index> map;
    auto operator<=>(const Embedding&) const = default;
};

struct MatchResult {
    std::vector<Embedding> embeddings;          // sorted by map
    std::vector<std::vector<Index>> subtypes;   // sorted image sets, deduplicated, sorted

    bool operator==(const MatchResult&) const = default;
};

struct MatchOptions {
    /// Worker threads for the first search level; 1 runs inline.
    std::size_t threads = 1;
};

/// Literal two-chain enumeration over all N^2 pairs with classify_pair dispatch.
MatchResult enumerate_two_chain(const OrderedType& order);

/// Pruned backtracking over pattern positions, most constrained first.
MatchResult match_pattern(const OrderedType& order, const Pattern& pattern, MatchOptions options = {});

/// Reference enumeration of every injective map, filtered by the full isomorphism condition.
MatchResult brute_force_match(const OrderedType& order, const Pattern& pattern);

/// Order automorphisms of the pattern, sorted; always contains the identity.
std::vector<Embedding> automorphisms(const Pattern& pattern);

}  // namespace gorder
