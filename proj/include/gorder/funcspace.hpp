#pragma once

// Desk-scale function space: partial functions from inhabited singleton subsets of
// X = {0..x_size-1} into the integer interval [y_min, y_max], ordered by domain
// inclusion plus pointwise <. With singleton domains, f < g forces a shared domain point.

#include <cstdint>
#include <vector>

#include "gorder/order.hpp"

namespace gorder::funcspace {

struct PartialFn {
    Index dom_point = 0;
    std::int64_t value = 0;
    bool operator==(const PartialFn&) const = default;
};

struct Config {
    std::size_t x_size = 1;
    std::int64_t y_min = 0;
    std::int64_t y_max = 0;

    std::size_t y_width() const { return static_cast<std::size_t>(y_max - y_min + 1); }
    std::size_t carrier_size() const { return x_size * y_width(); }
};

bool funcspace_lt(const PartialFn& f, const PartialFn& g);

/// Generated carrier and relation. Element order is dom_point-major through fin::product_index.
class FuncSpace {
public:
    explicit FuncSpace(Config cfg);

    const Config& config() const { return cfg_; }
    std::size_t size() const { return elements_.size(); }
    const Carrier& carrier() const { return carrier_; }
    const StrictRelation& relation() const { return lt_; }
    /// Derived <= of the generated relation, whether or not it passes validation.
    const BitMatrix& leq_matrix() const { return leq_; }
    const PartialFn& element(Index i) const { return elements_.at(i); }
    const std::vector<PartialFn>& elements() const { return elements_; }

    /// Throws OrderError(IndexOutOfRange) when f is outside the configured space.
    Index index_of(const PartialFn& f) const;

private:
    Config cfg_;
    std::vector<PartialFn> elements_;
    Carrier carrier_;
    StrictRelation lt_;
    BitMatrix leq_;
};

/// Throws std::invalid_argument for x_size == 0 or y_min > y_max.
FuncSpace build_funcspace(const Config& cfg);

/// Monotonicity for one pair: (dom f within dom g and f <= g pointwise) implies f <= g
/// in the derived order of the space.
bool lemma3_property(const FuncSpace& space, const PartialFn& f, const PartialFn& g);
/// Same, reading <= from a validated order built from the space.
bool lemma3_property(const FuncSpace& space, const OrderedType& order, const PartialFn& f, const PartialFn& g);

}  // namespace gorder::funcspace
