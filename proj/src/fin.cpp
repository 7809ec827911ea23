#include "gorder/fin.hpp"

#include <stdexcept>
#include <string>

namespace gorder::fin {

namespace {
[[noreturn]] void out_of_range(const char* what) { throw std::out_of_range(what); }
}  // namespace

std::size_t sum_index(SumIndex s, std::size_t n, std::size_t m) {
    if (s.side == Side::Left) {
        if (s.offset >= n) out_of_range("sum_index: left offset out of range");
        return s.offset;
    }
    if (s.offset >= m) out_of_range("sum_index: right offset out of range");
    return n + s.offset;
}

SumIndex sum_unindex(std::size_t k, std::size_t n, std::size_t m) {
    if (k >= n + m) out_of_range("sum_unindex: index out of range");
    if (k < n) return {Side::Left, k};
    return {Side::Right, k - n};
}

std::size_t product_index(ProductIndex p, std::size_t n, std::size_t m) {
    if (p.first >= n || p.second >= m) out_of_range("product_index: coordinate out of range");
    return p.first * m + p.second;
}

ProductIndex product_unindex(std::size_t k, std::size_t n, std::size_t m) {
    if (k >= n * m) out_of_range("product_unindex: index out of range");
    return {k / m, k % m};
}

namespace {
std::size_t total(std::span<const std::size_t> sizes) {
    std::size_t t = 0;
    for (auto s : sizes) t += s;
    return t;
}

std::size_t volume(std::span<const std::size_t> sizes) {
    std::size_t v = 1;
    for (auto s : sizes) v *= s;
    return v;
}
}  // namespace

// (X0 + ... + X{n-2}) + X{n-1}: recurse on the prefix, then one binary step.
std::size_t nary_sum_index(std::span<const std::size_t> sizes, std::size_t which, std::size_t offset) {
    if (which >= sizes.size()) out_of_range("nary_sum_index: summand out of range");
    const auto prefix = sizes.first(sizes.size() - 1);
    const std::size_t prefix_total = total(prefix);
    if (which + 1 == sizes.size()) return sum_index({Side::Right, offset}, prefix_total, sizes.back());
    return sum_index({Side::Left, nary_sum_index(prefix, which, offset)}, prefix_total, sizes.back());
}

NarySumIndex nary_sum_unindex(std::span<const std::size_t> sizes, std::size_t k) {
    if (sizes.empty()) out_of_range("nary_sum_unindex: index out of range");
    const auto prefix = sizes.first(sizes.size() - 1);
    const SumIndex s = sum_unindex(k, total(prefix), sizes.back());
    if (s.side == Side::Right) return {sizes.size() - 1, s.offset};
    return nary_sum_unindex(prefix, s.offset);
}

// (X0 x ... x X{n-2}) x X{n-1}. The empty product is Fin(1).
std::size_t nary_product_index(std::span<const std::size_t> sizes, std::span<const std::size_t> coords) {
    if (sizes.size() != coords.size())
        throw std::invalid_argument("nary_product_index: " + std::to_string(coords.size()) +
                                    " coordinates for " + std::to_string(sizes.size()) + " factors");
    if (sizes.empty()) return 0;
    const auto prefix = sizes.first(sizes.size() - 1);
    const std::size_t head = nary_product_index(prefix, coords.first(coords.size() - 1));
    return product_index({head, coords.back()}, volume(prefix), sizes.back());
}

std::vector<std::size_t> nary_product_unindex(std::span<const std::size_t> sizes, std::size_t k) {
    if (sizes.empty()) {
        if (k != 0) out_of_range("nary_product_unindex: index out of range");
        return {};
    }
    const auto prefix = sizes.first(sizes.size() - 1);
    const ProductIndex p = product_unindex(k, volume(prefix), sizes.back());
    std::vector<std::size_t> coords = nary_product_unindex(prefix, p.first);
    coords.push_back(p.second);
    return coords;
}

}  // namespace gorder::fin
