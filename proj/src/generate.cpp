#include "gorder/generate.hpp"

#include <random>

#include "gorder/fin.hpp"

namespace gorder::generate {

OrderDocument chain(std::size_t n) {
    StrictRelation rel(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) rel.add(i, j);
    return to_document(Carrier(n), rel, true);
}

OrderDocument antichain(std::size_t n) { return to_document(Carrier(n), StrictRelation(n), true); }

OrderDocument n_poset() { return to_document(Carrier(4), StrictRelation(4, {{0, 2}, {1, 2}, {1, 3}}), true); }

OrderDocument funcspace(const funcspace::Config& cfg) {
    const funcspace::FuncSpace space(cfg);
    return to_document(space.carrier(), space.relation(), true);
}

double unit_draw(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

RandomOrder random_order(std::size_t n, double p, std::uint64_t seed, std::size_t max_attempts) {
    if (n == 0) throw GenerateError("random: n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw GenerateError("random: p must lie in [0, 1]");
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        const std::uint64_t s = seed + attempt;
        std::mt19937_64 rng(s);
        StrictRelation rel(n);
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                if (unit_draw(rng()) < p) rel.add(i, j);
        auto built = validate_order(Carrier(n), transitive_closure(rel));
        if (auto* order = std::get_if<OrderedType>(&built)) return {std::move(*order), s, attempt + 1};
    }
    throw GenerateError("random: no valid order after " + std::to_string(max_attempts) + " attempts");
}

StrictRelation random_relation(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    StrictRelation rel(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (unit_draw(rng()) < p) rel.add(i, j);
    return rel;
}

namespace {
Combined finish(Carrier carrier, StrictRelation rel) {
    Combined out;
    out.report = axiom_report(carrier, rel);
    out.doc = to_document(carrier, rel, out.report.transitivity_triples.empty());
    return out;
}
}  // namespace

Combined sum(const OrderDocument& left, const OrderDocument& right) {
    const Carrier a = carrier_of(left), b = carrier_of(right);
    const StrictRelation ra = relation_of(left), rb = relation_of(right);
    const std::size_t n = a.size(), m = b.size();

    std::vector<std::string> labels(n + m);
    for (Index i = 0; i < n; ++i) labels[fin::sum_index({fin::Side::Left, i}, n, m)] = "L:" + a.label(i);
    for (Index i = 0; i < m; ++i) labels[fin::sum_index({fin::Side::Right, i}, n, m)] = "R:" + b.label(i);

    StrictRelation rel(n + m);
    for (auto [i, j] : ra.pairs())
        rel.add(fin::sum_index({fin::Side::Left, i}, n, m), fin::sum_index({fin::Side::Left, j}, n, m));
    for (auto [i, j] : rb.pairs())
        rel.add(fin::sum_index({fin::Side::Right, i}, n, m), fin::sum_index({fin::Side::Right, j}, n, m));
    return finish(Carrier(std::move(labels)), std::move(rel));
}

Combined product(const OrderDocument& left, const OrderDocument& right) {
    const Carrier a = carrier_of(left), b = carrier_of(right);
    const StrictRelation ra = relation_of(left), rb = relation_of(right);
    const std::size_t n = a.size(), m = b.size();
    const std::size_t total = n * m;

    std::vector<std::string> labels(total);
    for (std::size_t k = 0; k < total; ++k) {
        const auto [x, y] = fin::product_unindex(k, n, m);
        labels[k] = "(" + a.label(x) + "," + b.label(y) + ")";
    }
    auto weak = [](const StrictRelation& r, Index i, Index j) { return i == j || r.less(i, j); };
    StrictRelation rel(total);
    for (std::size_t k = 0; k < total; ++k) {
        const auto [x, y] = fin::product_unindex(k, n, m);
        for (std::size_t l = 0; l < total; ++l) {
            const auto [u, v] = fin::product_unindex(l, n, m);
            if (k != l && weak(ra, x, u) && weak(rb, y, v)) rel.add(k, l);
        }
    }
    return finish(Carrier(std::move(labels)), std::move(rel));
}

}  // namespace gorder::generate
