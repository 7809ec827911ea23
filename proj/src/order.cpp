#include "gorder/order.hpp"

#include <algorithm>

namespace gorder {

Carrier::Carrier(std::size_t n) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels_.push_back("e" + std::to_string(i));
        index_.emplace(labels_.back(), i);
    }
}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw OrderError(OrderError::Kind::DuplicateLabel, "duplicate label \"" + labels_[i] + "\"");
    }
}

Index Carrier::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        throw OrderError(OrderError::Kind::UnknownLabel, "unknown label \"" + std::string(label) + "\"");
    return it->second;
}

bool Carrier::contains(std::string_view label) const { return index_.count(std::string(label)) != 0; }

StrictRelation::StrictRelation(std::size_t n, const std::vector<std::pair<Index, Index>>& pairs) : lt_(n) {
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n)
            throw OrderError(OrderError::Kind::IndexOutOfRange, "relation pair index out of range");
        lt_.set(i, j);
    }
}

std::vector<std::pair<Index, Index>> StrictRelation::pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index i = 0; i < size(); ++i) successors(i).for_each([&](Index j) { out.emplace_back(i, j); });
    return out;
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Equal: return "Equal";
        case Classification::LessThan: return "LessThan";
        case Classification::GreaterThan: return "GreaterThan";
        case Classification::Unordered: return "Unordered";
    }
    return "?";
}

StrictRelation transitive_closure(const StrictRelation& rel) {
    BitMatrix m = rel.matrix();
    const std::size_t n = m.size();
    for (Index k = 0; k < n; ++k) {
        const BitSet via = m.row(k);
        for (Index i = 0; i < n; ++i)
            if (m.test(i, k)) m.row(i) |= via;
    }
    return StrictRelation(std::move(m));
}

BitMatrix derived_leq(const StrictRelation& rel) {
    const std::size_t n = rel.size();
    const BitMatrix down = rel.matrix().transposed();
    BitMatrix leq(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (down.row(i).is_subset_of(down.row(j)) && rel.successors(j).is_subset_of(rel.successors(i)))
                leq.set(i, j);
    return leq;
}

ViolationReport axiom_report(const Carrier& carrier, const StrictRelation& rel) {
    if (carrier.size() != rel.size())
        throw OrderError(OrderError::Kind::SizeMismatch, "carrier and relation sizes differ");
    const std::size_t n = rel.size();
    ViolationReport report;

    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j)
            if (rel.less(i, j) && rel.less(j, i)) report.asymmetry_pairs.emplace_back(i, j);

    // Missing composites per (i, j): succ(j) \ succ(i), enumerated in increasing k.
    for (Index i = 0; i < n; ++i) {
        rel.successors(i).for_each([&](Index j) {
            BitSet missing = rel.successors(j);
            missing.and_not(rel.successors(i));
            missing.for_each([&](Index k) { report.transitivity_triples.emplace_back(i, j, k); });
        });
    }

    const BitMatrix leq = derived_leq(rel);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (leq.test(i, j) && leq.test(j, i)) report.antisymmetry_pairs.emplace_back(i, j);

    return report;
}

OrderedType::OrderedType(Carrier carrier, StrictRelation lt, BitMatrix leq)
    : carrier_(std::move(carrier)), lt_(std::move(lt)), leq_(std::move(leq)), down_(lt_.matrix().transposed()) {}

BuildResult validate_order(Carrier carrier, StrictRelation rel) {
    if (carrier.empty()) throw OrderError(OrderError::Kind::EmptyCarrier, "carrier must have at least one element");
    ViolationReport report = axiom_report(carrier, rel);
    if (!report.empty()) return report;
    BitMatrix leq = derived_leq(rel);
    return OrderedType(std::move(carrier), std::move(rel), std::move(leq));
}

BuildResult build_order(const Carrier& carrier, const std::vector<std::pair<std::string, std::string>>& pairs,
                        bool close) {
    StrictRelation rel(carrier.size());
    for (const auto& [a, b] : pairs) rel.add(carrier.index_of(a), carrier.index_of(b));
    if (close) rel = transitive_closure(rel);
    return validate_order(carrier, std::move(rel));
}

namespace {
void check_index(const OrderedType& order, Index i) {
    if (i >= order.size())
        throw OrderError(OrderError::Kind::IndexOutOfRange,
                         "index " + std::to_string(i) + " out of range for carrier of size " +
                             std::to_string(order.size()));
}
}  // namespace

Classification classify_pair(const OrderedType& order, Index i, Index j) {
    check_index(order, i);
    check_index(order, j);
    if (i == j) return Classification::Equal;
    if (order.less(i, j)) return Classification::LessThan;
    if (order.less(j, i)) return Classification::GreaterThan;
    return Classification::Unordered;
}

Signature signature(const OrderedType& order, Index i) {
    check_index(order, i);
    return {order.down(i).count(), order.up(i).count()};
}

bool is_unbounded(const OrderedType& order) {
    for (Index i = 0; i < order.size(); ++i)
        if (order.down(i).none() || order.up(i).none()) return false;
    return true;
}

}  // namespace gorder
