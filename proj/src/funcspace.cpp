#include "gorder/funcspace.hpp"

#include <stdexcept>
#include <string>

#include "gorder/fin.hpp"

namespace gorder::funcspace {

bool funcspace_lt(const PartialFn& f, const PartialFn& g) {
    return f.dom_point == g.dom_point && f.value < g.value;
}

FuncSpace::FuncSpace(Config cfg) : cfg_(cfg) {
    if (cfg_.x_size == 0) throw std::invalid_argument("funcspace: x_size must be positive");
    if (cfg_.y_min > cfg_.y_max) throw std::invalid_argument("funcspace: y_min exceeds y_max");

    const std::size_t width = cfg_.y_width();
    const std::size_t n = cfg_.carrier_size();
    elements_.resize(n);
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto [x, y] = fin::product_unindex(k, cfg_.x_size, width);
        elements_[k] = {x, cfg_.y_min + static_cast<std::int64_t>(y)};
        labels[k] = "f(x" + std::to_string(x) + ")=" + std::to_string(elements_[k].value);
    }
    carrier_ = Carrier(std::move(labels));

    lt_ = StrictRelation(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (funcspace_lt(elements_[i], elements_[j])) lt_.add(i, j);
    leq_ = derived_leq(lt_);
}

Index FuncSpace::index_of(const PartialFn& f) const {
    if (f.dom_point >= cfg_.x_size || f.value < cfg_.y_min || f.value > cfg_.y_max)
        throw OrderError(OrderError::Kind::IndexOutOfRange, "partial function outside the configured space");
    return fin::product_index({f.dom_point, static_cast<std::size_t>(f.value - cfg_.y_min)}, cfg_.x_size,
                              cfg_.y_width());
}

FuncSpace build_funcspace(const Config& cfg) { return FuncSpace(cfg); }

namespace {
// Y is an integer interval, a chain, whose derived <= is the usual one.
bool hypothesis(const PartialFn& f, const PartialFn& g) {
    return f.dom_point == g.dom_point && f.value <= g.value;
}
}  // namespace

bool lemma3_property(const FuncSpace& space, const PartialFn& f, const PartialFn& g) {
    const Index i = space.index_of(f);
    const Index j = space.index_of(g);
    return !hypothesis(f, g) || space.leq_matrix().test(i, j);
}

bool lemma3_property(const FuncSpace& space, const OrderedType& order, const PartialFn& f, const PartialFn& g) {
    const Index i = space.index_of(f);
    const Index j = space.index_of(g);
    if (order.size() != space.size() || !(order.carrier() == space.carrier()))
        throw OrderError(OrderError::Kind::SizeMismatch, "order was not built from this function space");
    return !hypothesis(f, g) || order.leq(i, j);
}

}  // namespace gorder::funcspace
