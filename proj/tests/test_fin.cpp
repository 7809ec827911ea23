#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "gorder/fin.hpp"

using namespace gorder::fin;

TEST(SumIndex, Examples) {
    EXPECT_EQ(sum_index({Side::Left, 0}, 3, 2), 0U);
    EXPECT_EQ(sum_index({Side::Right, 1}, 3, 2), 4U);
    EXPECT_EQ(sum_index({Side::Right, 0}, 0, 5), 0U);
    EXPECT_EQ(sum_unindex(4, 3, 2), (SumIndex{Side::Right, 1}));
    EXPECT_EQ(sum_unindex(2, 3, 2), (SumIndex{Side::Left, 2}));
}

TEST(SumIndex, OutOfRange) {
    EXPECT_THROW(sum_index({Side::Left, 3}, 3, 2), std::out_of_range);
    EXPECT_THROW(sum_index({Side::Right, 2}, 3, 2), std::out_of_range);
    EXPECT_THROW(sum_unindex(5, 3, 2), std::out_of_range);
    EXPECT_THROW(sum_unindex(0, 0, 0), std::out_of_range);
}

TEST(SumIndex, RoundTripSevenFive) {
    for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(sum_index(sum_unindex(k, 7, 5), 7, 5), k);
}

TEST(SumIndex, ImagesAreDisjointAndExhaustive) {
    for (std::size_t n = 0; n <= 9; ++n)
        for (std::size_t m = 0; m <= 9; ++m) {
            std::vector<int> hits(n + m, 0);
            for (std::size_t i = 0; i < n; ++i) ++hits[sum_index({Side::Left, i}, n, m)];
            for (std::size_t i = 0; i < m; ++i) ++hits[sum_index({Side::Right, i}, n, m)];
            for (int h : hits) EXPECT_EQ(h, 1);
        }
}

TEST(ProductIndex, Examples) {
    EXPECT_EQ(product_index({0, 0}, 2, 3), 0U);
    EXPECT_EQ(product_index({1, 2}, 2, 3), 5U);
    EXPECT_EQ(product_unindex(4, 2, 3), (ProductIndex{1, 1}));
    EXPECT_THROW(product_index({2, 0}, 2, 3), std::out_of_range);
    EXPECT_THROW(product_index({0, 3}, 2, 3), std::out_of_range);
    EXPECT_THROW(product_unindex(6, 2, 3), std::out_of_range);
    EXPECT_THROW(product_unindex(0, 4, 0), std::out_of_range);
}

TEST(ProductIndex, RowMajorBlocks) {
    // Block L(k) occupies [k*m, (k+1)*m).
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 5; ++j) {
            const auto flat = product_index({k, j}, 4, 5);
            EXPECT_GE(flat, k * 5);
            EXPECT_LT(flat, (k + 1) * 5);
        }
}

TEST(NarySum, Examples) {
    const std::vector<std::size_t> sizes{2, 3, 1};
    EXPECT_EQ(nary_sum_index(sizes, 2, 0), 5U);
    EXPECT_EQ(nary_sum_index(std::vector<std::size_t>{4}, 0, 3), 3U);
    for (std::size_t k = 0; k < 6; ++k) {
        const auto s = nary_sum_unindex(sizes, k);
        EXPECT_EQ(nary_sum_index(sizes, s.which, s.offset), k);
    }
    EXPECT_EQ(nary_sum_unindex(sizes, 2), (NarySumIndex{1, 0}));
    EXPECT_THROW(nary_sum_index(sizes, 3, 0), std::out_of_range);
    EXPECT_THROW(nary_sum_index(sizes, 1, 3), std::out_of_range);
    EXPECT_THROW(nary_sum_unindex(sizes, 6), std::out_of_range);
}

TEST(NarySum, AgreesWithLeftNestedBinarySums) {
    const std::vector<std::size_t> sizes{3, 0, 4, 2};
    // ((X0 + X1) + X2) + X3 by hand.
    for (std::size_t w = 0; w < sizes.size(); ++w)
        for (std::size_t off = 0; off < sizes[w]; ++off) {
            std::size_t acc = 0;
            std::size_t prefix = 0;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (i == w)
                    acc = sum_index({Side::Right, off}, prefix, sizes[i]);
                else if (i > w)
                    acc = sum_index({Side::Left, acc}, prefix, sizes[i]);
                prefix += sizes[i];
            }
            EXPECT_EQ(nary_sum_index(sizes, w, off), acc);
        }
}

TEST(NaryProduct, Examples) {
    EXPECT_EQ(nary_product_index(std::vector<std::size_t>{2, 2}, std::vector<std::size_t>{1, 1}), 3U);
    const std::vector<std::size_t> sizes{2, 3, 2};
    EXPECT_EQ(nary_product_index(sizes, std::vector<std::size_t>{1, 2, 0}), 10U);
    for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(nary_product_index(sizes, nary_product_unindex(sizes, k)), k);
    EXPECT_EQ(nary_product_unindex(sizes, 10), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(NaryProduct, Errors) {
    const std::vector<std::size_t> sizes{2, 3, 2};
    EXPECT_THROW(nary_product_index(sizes, std::vector<std::size_t>{1, 2}), std::invalid_argument);
    EXPECT_THROW(nary_product_index(sizes, std::vector<std::size_t>{1, 3, 0}), std::out_of_range);
    EXPECT_THROW(nary_product_unindex(sizes, 12), std::out_of_range);
}

TEST(NaryProduct, AgreesWithLeftNestedBinaryProducts) {
    const std::vector<std::size_t> sizes{3, 2, 4};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 4; ++c) {
                const auto nested = product_index({product_index({a, b}, 3, 2), c}, 6, 4);
                EXPECT_EQ(nary_product_index(sizes, std::vector<std::size_t>{a, b, c}), nested);
            }
}

TEST(NaryProduct, EmptyProductIsSingleton) {
    EXPECT_EQ(nary_product_index({}, {}), 0U);
    EXPECT_TRUE(nary_product_unindex({}, 0).empty());
    EXPECT_THROW(nary_product_unindex({}, 1), std::out_of_range);
}
