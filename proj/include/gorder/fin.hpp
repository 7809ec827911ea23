#pragma once

// Index bijections between Fin(n) and sums/products of finite carriers.
// Products are row-major and n-ary folds associate to the left, so the first
// coordinate is the most significant digit.

#include <cstddef>
#include <span>
#include <vector>

namespace gorder::fin {

enum class Side { Left, Right };

struct SumIndex {
    Side side = Side::Left;
    std::size_t offset = 0;
    bool operator==(const SumIndex&) const = default;
};

struct ProductIndex {
    std::size_t first = 0;
    std::size_t second = 0;
    bool operator==(const ProductIndex&) const = default;
};

/// Fin(n) + Fin(m) -> Fin(n + m). Throws std::out_of_range.
std::size_t sum_index(SumIndex s, std::size_t n, std::size_t m);
SumIndex sum_unindex(std::size_t k, std::size_t n, std::size_t m);

/// Fin(n) x Fin(m) -> Fin(n * m), (a, b) -> a * m + b. Throws std::out_of_range.
std::size_t product_index(ProductIndex p, std::size_t n, std::size_t m);
ProductIndex product_unindex(std::size_t k, std::size_t n, std::size_t m);

struct NarySumIndex {
    std::size_t which = 0;
    std::size_t offset = 0;
    bool operator==(const NarySumIndex&) const = default;
};

std::size_t nary_sum_index(std::span<const std::size_t> sizes, std::size_t which, std::size_t offset);
NarySumIndex nary_sum_unindex(std::span<const std::size_t> sizes, std::size_t k);

/// Mixed radix, most significant first. Throws std::out_of_range, or std::invalid_argument on a
/// length mismatch.
std::size_t nary_product_index(std::span<const std::size_t> sizes, std::span<const std::size_t> coords);
std::vector<std::size_t> nary_product_unindex(std::span<const std::size_t> sizes, std::size_t k);

}  // namespace gorder::fin
