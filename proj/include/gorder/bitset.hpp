#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gorder {

/// Fixed-size dynamic bitset over 64-bit words. Bits past size() are always zero.
class BitSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitSet() = default;
    explicit BitSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    void set_all() {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    /// True iff every bit of *this is also set in other.
    bool is_subset_of(const BitSet& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    BitSet& operator|=(const BitSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    BitSet& operator&=(const BitSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    BitSet& and_not(const BitSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    /// Calls fn(i) for every set bit in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                const auto tz = static_cast<std::size_t>(std::countr_zero(bits));
                fn(w * kWordBits + tz);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    const std::vector<Word>& words() const { return words_; }

    bool operator==(const BitSet&) const = default;

private:
    void trim() {
        if (size_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Square boolean matrix stored as one BitSet per row.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : rows_(n, BitSet(n)) {}

    std::size_t size() const { return rows_.size(); }

    bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    void set(std::size_t i, std::size_t j) { rows_[i].set(j); }
    void reset(std::size_t i, std::size_t j) { rows_[i].reset(j); }

    const BitSet& row(std::size_t i) const { return rows_[i]; }
    BitSet& row(std::size_t i) { return rows_[i]; }

    BitMatrix transposed() const {
        BitMatrix t(size());
        for (std::size_t i = 0; i < size(); ++i) rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
        return t;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (const auto& r : rows_) c += r.count();
        return c;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::vector<BitSet> rows_;
};

}  // namespace gorder
