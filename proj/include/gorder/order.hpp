#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "gorder/bitset.hpp"

namespace gorder {

using Index = std::size_t;

class OrderError : public std::runtime_error {
public:
    enum class Kind { UnknownLabel, DuplicateLabel, EmptyCarrier, IndexOutOfRange, SizeMismatch };

    OrderError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Finite carrier: N elements identified by index, each with a distinct label.
class Carrier {
public:
    Carrier() = default;
    /// Default labels "e0".."e{n-1}".
    explicit Carrier(std::size_t n);
    /// Throws OrderError(DuplicateLabel) naming the first repeated label.
    explicit Carrier(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(Index i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Throws OrderError(UnknownLabel) naming the label.
    Index index_of(std::string_view label) const;
    bool contains(std::string_view label) const;

    bool operator==(const Carrier& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Index> index_;
};

/// Raw strict relation: less(i, j) means x_i < x_j. No axioms are assumed.
class StrictRelation {
public:
    StrictRelation() = default;
    explicit StrictRelation(std::size_t n) : lt_(n) {}
    StrictRelation(std::size_t n, const std::vector<std::pair<Index, Index>>& pairs);
    explicit StrictRelation(BitMatrix lt) : lt_(std::move(lt)) {}

    std::size_t size() const { return lt_.size(); }
    bool less(Index i, Index j) const { return lt_.test(i, j); }
    void add(Index i, Index j) { lt_.set(i, j); }

    /// Strict successors of i, i.e. {j : i < j}.
    const BitSet& successors(Index i) const { return lt_.row(i); }
    const BitMatrix& matrix() const { return lt_; }

    /// All pairs (i, j) with i < j in the relation, lexicographic.
    std::vector<std::pair<Index, Index>> pairs() const;

    bool operator==(const StrictRelation&) const = default;

private:
    BitMatrix lt_;
};

enum class Classification { Equal, LessThan, GreaterThan, Unordered };

std::string_view to_string(Classification c);

struct Signature {
    std::size_t down = 0;
    std::size_t up = 0;

    /// Componentwise >=.
    bool dominates(const Signature& o) const { return down >= o.down && up >= o.up; }
    bool operator==(const Signature&) const = default;
};

/// Every violation of the three axioms, each list sorted lexicographically.
struct ViolationReport {
    std::vector<std::pair<Index, Index>> asymmetry_pairs;
    std::vector<std::tuple<Index, Index, Index>> transitivity_triples;
    std::vector<std::pair<Index, Index>> antisymmetry_pairs;

    bool empty() const {
        return asymmetry_pairs.empty() && transitivity_triples.empty() && antisymmetry_pairs.empty();
    }
    bool operator==(const ViolationReport&) const = default;
};

/// Smallest transitive relation containing rel (Warshall over bitset rows).
StrictRelation transitive_closure(const StrictRelation& rel);

/// leq(i, j) iff down(i) is contained in down(j) and up(j) is contained in up(i).
BitMatrix derived_leq(const StrictRelation& rel);

/// Asymmetry pairs (i, j) have i <= j, so a reflexive loop shows up as (i, i). Antisymmetry
/// pairs have i < j.
ViolationReport axiom_report(const Carrier& carrier, const StrictRelation& rel);

/// A finite generalized ordered type. Only obtainable through build_order / validate_order,
/// so every instance satisfies asymmetry, transitivity and positive antisymmetry.
class OrderedType {
public:
    std::size_t size() const { return carrier_.size(); }
    const Carrier& carrier() const { return carrier_; }
    const StrictRelation& relation() const { return lt_; }
    const BitMatrix& leq_matrix() const { return leq_; }

    bool less(Index i, Index j) const { return lt_.less(i, j); }
    bool leq(Index i, Index j) const { return leq_.test(i, j); }
    const BitSet& down(Index i) const { return down_.row(i); }
    const BitSet& up(Index i) const { return lt_.successors(i); }
    const BitMatrix& down_matrix() const { return down_; }

private:
    friend std::variant<OrderedType, ViolationReport> validate_order(Carrier, StrictRelation);
    OrderedType(Carrier carrier, StrictRelation lt, BitMatrix leq);

    Carrier carrier_;
    StrictRelation lt_;
    BitMatrix leq_;
    BitMatrix down_;  // transpose of lt
};

using BuildResult = std::variant<OrderedType, ViolationReport>;

/// Validates an index-level relation. Throws OrderError(EmptyCarrier) or (SizeMismatch).
BuildResult validate_order(Carrier carrier, StrictRelation rel);

/// Translates label pairs to indices, optionally closes, then validates.
BuildResult build_order(const Carrier& carrier, const std::vector<std::pair<std::string, std::string>>& pairs,
                        bool close);

/// Throws OrderError(IndexOutOfRange).
Classification classify_pair(const OrderedType& order, Index i, Index j);
Signature signature(const OrderedType& order, Index i);

/// Every element has a strict lower and a strict upper neighbour. Never holds for a nonempty
/// finite order, since a minimal element exists.
bool is_unbounded(const OrderedType& order);

}  // namespace gorder
