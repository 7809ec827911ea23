#include "gorder/matcher.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <numeric>
#include <thread>

#include "gorder/fin.hpp"

namespace gorder {

Pattern::Pattern(Carrier carrier, StrictRelation lt)
    : carrier_(std::move(carrier)), lt_(std::move(lt)), down_(lt_.matrix().transposed()) {}

std::variant<Pattern, ViolationReport> Pattern::from_relation(Carrier carrier, StrictRelation lt) {
    ViolationReport report = axiom_report(carrier, lt);
    report.antisymmetry_pairs.clear();
    if (!report.empty()) return report;
    return Pattern(std::move(carrier), std::move(lt));
}

Pattern Pattern::from_order(const OrderedType& order) { return Pattern(order.carrier(), order.relation()); }

Pattern Pattern::chain(std::size_t n) {
    StrictRelation lt(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) lt.add(i, j);
    return Pattern(Carrier(n), std::move(lt));
}

Pattern Pattern::antichain(std::size_t n) { return Pattern(Carrier(n), StrictRelation(n)); }

namespace {

// Up/down adjacency of either side of the search.
struct View {
    const BitMatrix& up;
    const BitMatrix& down;

    std::size_t size() const { return up.size(); }
    Signature signature(Index i) const { return {down.row(i).count(), up.row(i).count()}; }
};

// Embeddings stored row-wise, width ints per row.
struct Collector {
    std::size_t width = 0;
    std::vector<Index> data;

    std::size_t rows() const { return width == 0 ? empty_rows : data.size() / width; }
    void push(const std::vector<Index>& map) {
        if (width == 0) ++empty_rows;
        data.insert(data.end(), map.begin(), map.end());
    }
    void append(Collector&& other) {
        empty_rows += other.empty_rows;
        data.insert(data.end(), other.data.begin(), other.data.end());
    }

    std::size_t empty_rows = 0;
};

class Search {
public:
    Search(View ground, View pattern) : ground_(ground), pattern_(pattern), k_(pattern.size()) {
        order_.resize(k_);
        std::iota(order_.begin(), order_.end(), Index{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Index a, Index b) {
            const auto sa = pattern_.signature(a), sb = pattern_.signature(b);
            return sa.down + sa.up > sb.down + sb.up;
        });
        std::vector<Signature> ground_sigs(ground_.size());
        for (Index c = 0; c < ground_.size(); ++c) ground_sigs[c] = ground_.signature(c);
        admissible_.assign(k_, BitSet(ground_.size()));
        for (Index p = 0; p < k_; ++p) {
            const Signature need = pattern_.signature(p);
            for (Index c = 0; c < ground_.size(); ++c)
                if (ground_sigs[c].dominates(need)) admissible_[p].set(c);
        }
    }

    std::size_t depth() const { return k_; }

    // Candidates for search depth d, given the images already fixed at depths < d.
    BitSet candidates(std::size_t d, const std::vector<Index>& map, const BitSet& used) const {
        const Index p = order_[d];
        BitSet cand = admissible_[p];
        cand.and_not(used);
        for (std::size_t e = 0; e < d; ++e) {
            const Index q = order_[e];
            const Index g = map[q];
            if (pattern_.up.test(p, q))
                cand &= ground_.down.row(g);
            else
                cand.and_not(ground_.down.row(g));
            if (pattern_.up.test(q, p))
                cand &= ground_.up.row(g);
            else
                cand.and_not(ground_.up.row(g));
        }
        return cand;
    }

    void run_from(std::size_t d, std::vector<Index>& map, BitSet& used, Collector& out) const {
        if (d == k_) {
            out.push(map);
            return;
        }
        const Index p = order_[d];
        candidates(d, map, used).for_each([&](Index c) {
            map[p] = c;
            used.set(c);
            run_from(d + 1, map, used, out);
            used.reset(c);
        });
    }

    // Subtree rooted at the first position mapped to c.
    void run_rooted(Index c, Collector& out) const {
        std::vector<Index> map(k_, 0);
        BitSet used(ground_.size());
        map[order_[0]] = c;
        used.set(c);
        run_from(1, map, used, out);
    }

private:
    View ground_;
    View pattern_;
    std::size_t k_;
    std::vector<Index> order_;
    std::vector<BitSet> admissible_;
};

// Stable LSD sort on the key, 11 bits per pass; only the low `bits` bits are examined.
void radix_sort(std::vector<std::pair<std::uint64_t, std::size_t>>& items, int bits) {
    constexpr int kDigit = 11;
    constexpr std::size_t kBuckets = std::size_t{1} << kDigit;
    std::vector<std::pair<std::uint64_t, std::size_t>> scratch(items.size());
    for (int shift = 0; shift < bits; shift += kDigit) {
        std::vector<std::size_t> offset(kBuckets + 1, 0);
        for (const auto& it : items) ++offset[((it.first >> shift) & (kBuckets - 1)) + 1];
        std::partial_sum(offset.begin(), offset.end(), offset.begin());
        for (const auto& it : items) scratch[offset[(it.first >> shift) & (kBuckets - 1)]++] = it;
        items.swap(scratch);
    }
}

// Sorted, deduplicated row ids of a flat table whose entries are all < radix. Rows are packed
// into one mixed-radix key when radix^width fits in 64 bits; numeric key order is then the
// lexicographic row order.
std::vector<std::size_t> sorted_unique_rows(const std::vector<Index>& data, std::size_t width, std::size_t rows,
                                            std::size_t radix) {
    auto row = [&](std::size_t r) { return data.begin() + static_cast<std::ptrdiff_t>(r * width); };
    const auto w = static_cast<std::ptrdiff_t>(width);

    bool packable = radix > 0;
    std::uint64_t volume = 1;
    for (std::size_t i = 0; i < width && packable; ++i) {
        if (volume > std::numeric_limits<std::uint64_t>::max() / radix) packable = false;
        volume *= radix;
    }
    const std::uint64_t max_key = volume - 1;
    if (packable) {
        const std::vector<std::size_t> radices(width, radix);
        std::vector<std::pair<std::uint64_t, std::size_t>> keyed(rows);
        for (std::size_t r = 0; r < rows; ++r)
            keyed[r] = {fin::nary_product_index(radices, std::span<const Index>(&*row(r), width)), r};
        radix_sort(keyed, std::bit_width(max_key));
        keyed.erase(std::unique(keyed.begin(), keyed.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    keyed.end());
        std::vector<std::size_t> ids(keyed.size());
        for (std::size_t i = 0; i < keyed.size(); ++i) ids[i] = keyed[i].second;
        return ids;
    }

    std::vector<std::size_t> ids(rows);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + w, row(b), row(b) + w);
    });
    ids.erase(std::unique(ids.begin(), ids.end(),
                          [&](std::size_t a, std::size_t b) { return std::equal(row(a), row(a) + w, row(b)); }),
              ids.end());
    return ids;
}

std::vector<std::vector<Index>> materialize(const std::vector<Index>& data, std::size_t width,
                                            const std::vector<std::size_t>& ids) {
    std::vector<std::vector<Index>> out;
    out.reserve(ids.size());
    for (std::size_t r : ids) {
        const auto first = data.begin() + static_cast<std::ptrdiff_t>(r * width);
        out.emplace_back(first, first + static_cast<std::ptrdiff_t>(width));
    }
    return out;
}

MatchResult finalize(Collector found, std::size_t ground_size) {
    MatchResult result;
    const std::size_t k = found.width;
    if (k == 0) {
        if (found.rows() > 0) {
            result.embeddings.push_back({});
            result.subtypes.emplace_back();
        }
        return result;
    }
    const auto ids = sorted_unique_rows(found.data, k, found.rows(), ground_size);
    result.embeddings.reserve(ids.size());
    for (auto& m : materialize(found.data, k, ids)) result.embeddings.push_back({std::move(m)});

    std::vector<Index> images;
    images.reserve(ids.size() * k);
    for (std::size_t r : ids) {
        const auto first = found.data.begin() + static_cast<std::ptrdiff_t>(r * k);
        const auto at = images.insert(images.end(), first, first + static_cast<std::ptrdiff_t>(k));
        std::sort(at, images.end());
    }
    result.subtypes = materialize(images, k, sorted_unique_rows(images, k, ids.size(), ground_size));
    return result;
}

Collector search_all(View ground, View pattern, std::size_t threads) {
    Collector out{pattern.size(), {}};
    if (pattern.size() == 0) {
        out.push({});
        return out;
    }
    if (pattern.size() > ground.size()) return out;

    const Search search(ground, pattern);
    std::vector<Index> map(search.depth(), 0);
    const BitSet used(ground.size());
    const std::vector<Index> roots = search.candidates(0, map, used).indices();

    if (threads <= 1 || roots.size() <= 1) {
        for (Index c : roots) search.run_rooted(c, out);
        return out;
    }

    std::vector<Collector> partial(roots.size(), Collector{pattern.size(), {}});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t r = next++; r < roots.size(); r = next++) search.run_rooted(roots[r], partial[r]);
    };
    std::vector<std::jthread> pool;
    const std::size_t n_workers = std::min(threads, roots.size());
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    pool.clear();

    std::size_t total = 0;
    for (const auto& p : partial) total += p.data.size();
    out.data.reserve(total);
    for (auto& p : partial) out.append(std::move(p));
    return out;
}

}  // namespace

MatchResult enumerate_two_chain(const OrderedType& order) {
    const std::size_t n = order.size();
    Collector found{2, {}};
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto [i, j] = fin::product_unindex(k, n, n);
        switch (classify_pair(order, i, j)) {
            case Classification::Equal:
            case Classification::Unordered: break;
            case Classification::LessThan: found.push({i, j}); break;
            case Classification::GreaterThan: found.push({j, i}); break;
        }
    }
    return finalize(std::move(found), n);
}

MatchResult match_pattern(const OrderedType& order, const Pattern& pattern, MatchOptions options) {
    const View ground{order.relation().matrix(), order.down_matrix()};
    const View pat{pattern.relation().matrix(), pattern.down_matrix()};
    return finalize(search_all(ground, pat, options.threads), order.size());
}

namespace {
void brute_force_rec(const OrderedType& order, const Pattern& pattern, std::vector<Index>& map,
                     std::vector<bool>& used, Collector& out) {
    const std::size_t k = pattern.size();
    if (map.size() == k) {
        for (Index p = 0; p < k; ++p)
            for (Index q = 0; q < k; ++q)
                if (pattern.less(p, q) != order.less(map[p], map[q])) return;
        out.push(map);
        return;
    }
    for (Index c = 0; c < order.size(); ++c) {
        if (used[c]) continue;
        used[c] = true;
        map.push_back(c);
        brute_force_rec(order, pattern, map, used, out);
        map.pop_back();
        used[c] = false;
    }
}
}  // namespace

MatchResult brute_force_match(const OrderedType& order, const Pattern& pattern) {
    Collector out{pattern.size(), {}};
    std::vector<Index> map;
    std::vector<bool> used(order.size(), false);
    if (pattern.size() <= order.size()) brute_force_rec(order, pattern, map, used, out);
    return finalize(std::move(out), order.size());
}

std::vector<Embedding> automorphisms(const Pattern& pattern) {
    const View pat{pattern.relation().matrix(), pattern.down_matrix()};
    return finalize(search_all(pat, pat, 1), pattern.size()).embeddings;
}

}  // namespace gorder
