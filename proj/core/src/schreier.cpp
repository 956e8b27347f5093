#include "aslab/schreier.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace aslab {

SchreierSet::SchreierSet(std::vector<std::int64_t> elems, int k) : elements(std::move(elems)), order(k) {
    if (order < 0) throw std::invalid_argument("SchreierSet: order must be >= 0");
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1) throw std::invalid_argument("SchreierSet: elements must be positive");
        if (i > 0 && elements[i] <= elements[i - 1])
            throw std::invalid_argument("SchreierSet: elements must be strictly increasing");
    }
}

namespace {

// Decomposition search over the sorted element array. States are
// (tail-start, order) for membership and (tail-start, blocks, order) for the
// exact-count split; both memoized per call.
struct MemberSearch {
    const std::vector<std::int64_t>& e;
    std::unordered_map<std::uint64_t, bool> memo_member;
    std::unordered_map<std::uint64_t, bool> memo_split;

    explicit MemberSearch(const std::vector<std::int64_t>& elems) : e(elems) {}

    static std::uint64_t key2(size_t a, int k) { return (static_cast<std::uint64_t>(a) << 8) | static_cast<unsigned>(k); }
    static std::uint64_t key3(size_t a, size_t n, int k) {
        return (static_cast<std::uint64_t>(a) << 24) | (static_cast<std::uint64_t>(n) << 8) | static_cast<unsigned>(k);
    }

    // e[start..end) in S_k?
    bool member(size_t start, size_t end, int k) {
        size_t len = end - start;
        if (len == 0) return true;
        if (k == 0) return len == 1;
        auto key = key2(start, k) ^ (static_cast<std::uint64_t>(end) << 40);
        auto it = memo_member.find(key);
        if (it != memo_member.end()) return it->second;
        bool ok = false;
        std::int64_t first = e[start];
        std::int64_t cap = std::min<std::int64_t>(first, static_cast<std::int64_t>(len));
        for (std::int64_t n = 1; n <= cap && !ok; ++n) {
            ok = split_exact(start, end, static_cast<size_t>(n), k - 1);
        }
        memo_member[key] = ok;
        return ok;
    }

    // e[start..end) splittable into exactly n nonempty consecutive S_k chunks?
    bool split_exact(size_t start, size_t end, size_t n, int k) {
        size_t len = end - start;
        if (n == 0) return len == 0;
        if (len < n) return false;
        if (n == 1) return member(start, end, k);
        auto key = key3(start, n, k) ^ (static_cast<std::uint64_t>(end) << 40);
        auto it = memo_split.find(key);
        if (it != memo_split.end()) return it->second;
        bool ok = false;
        for (size_t cut = start + 1; cut + (n - 2) < end && !ok; ++cut) {
            if (member(start, cut, k)) ok = split_exact(cut, end, n - 1, k);
        }
        memo_split[key] = ok;
        return ok;
    }
};

bool member_range(const std::vector<std::int64_t>& e, int k) {
    MemberSearch s(e);
    return s.member(0, e.size(), k);
}

// Longest prefix of e[start..) that lies in S_k; returns its end index.
// The empty prefix is in every S_k but is never a block, so the result is
// > start whenever a nonempty S_k prefix exists (singletons always do for
// k >= 1; for k == 0 the only nonempty members are singletons).
size_t greedy_prefix_end(const std::vector<std::int64_t>& e, size_t start, int k) {
    MemberSearch s(e);
    size_t best = start;
    for (size_t end = start + 1; end <= e.size(); ++end) {
        if (s.member(start, end, k)) best = end;
    }
    return best;
}

}  // namespace

bool is_member(const SchreierSet& f) { return member_range(f.elements, f.order); }

bool is_maximal(const SchreierSet& f) {
    if (!is_member(f)) throw std::invalid_argument("is_maximal: set not in S_k");
    if (f.empty()) return false;  // the empty set extends to any singleton (k >= 1) and is never maximal
    if (f.order == 0) return true;
    // Single-extension test: by the spreading property any insertable element
    // can be spread past max F, so appending max F + 1 is the only case.
    std::vector<std::int64_t> ext = f.elements;
    ext.push_back(f.max() + 1);
    return !member_range(ext, f.order);
}

WeightMap weights(const SchreierSet& f) {
    if (!is_maximal(f)) throw std::invalid_argument("weights: set not maximal in S_k");
    if (f.order == 0) return WeightMap{{f.min(), Rational(1)}};
    std::vector<SchreierSet> blocks = greedy_decompose(f, f.order - 1);
    auto n = static_cast<std::int64_t>(blocks.size());
    if (n != f.min())
        throw std::logic_error("weights: decomposition block count does not match min F");
    WeightMap w;
    Rational inv_n(1, n);
    for (const SchreierSet& block : blocks) {
        WeightMap inner = weights(block);
        for (const auto& [j, wj] : inner) w[j] = inv_n * wj;
    }
    return w;
}

std::vector<SchreierSet> greedy_decompose(const SchreierSet& f, int l) {
    if (l < 0 || l > f.order) throw std::invalid_argument("greedy_decompose: need 0 <= l <= order");
    if (!is_maximal(f)) throw std::invalid_argument("greedy_decompose: set not maximal at stated order");
    int k = f.order - l;
    std::vector<SchreierSet> blocks;
    size_t start = 0;
    while (start < f.elements.size()) {
        size_t end = greedy_prefix_end(f.elements, start, l);
        if (end == start)
            throw std::logic_error("greedy_decompose: empty block");
        blocks.emplace_back(std::vector<std::int64_t>(f.elements.begin() + static_cast<long>(start),
                                                      f.elements.begin() + static_cast<long>(end)),
                            l);
        start = end;
    }
    std::vector<std::int64_t> minima;
    minima.reserve(blocks.size());
    for (const auto& b : blocks) minima.push_back(b.min());
    SchreierSet index_set(minima, k);
    if (!is_member(index_set) || !is_maximal(index_set))
        throw std::logic_error("greedy_decompose: block minima not maximal in S_k");
    return blocks;
}

namespace {

// Emit every F in MAX(S_k) with min F = start, max F <= bound, appended to acc;
// calls `next` for each completion (with acc extended by the block).
void blocks_rec(int k, std::int64_t start, std::int64_t bound, std::vector<std::int64_t>& acc,
                const std::function<void()>& next) {
    if (k == 0) {
        if (start > bound) return;
        acc.push_back(start);
        next();
        acc.pop_back();
        return;
    }
    // F = B_1 u ... u B_n with n = start, B_i in MAX(S_{k-1}), min B_1 = start.
    std::function<void(std::int64_t, std::int64_t)> place = [&](std::int64_t i, std::int64_t lo) {
        if (i > start) {
            next();
            return;
        }
        if (lo > bound) return;
        for (std::int64_t s = lo; s <= bound; ++s) {
            // skip-first only for blocks after the first: min of block 1 is pinned
            if (i == 1 && s != start) break;
            blocks_rec(k - 1, s, bound, acc, [&] { place(i + 1, acc.back() + 1); });
        }
    };
    place(1, start);
}

}  // namespace

void enumerate_maximal(int k, std::int64_t min_first, std::int64_t max_element,
                       const std::function<void(const SchreierSet&)>& emit) {
    if (k < 0 || k > 3) throw std::invalid_argument("enumerate_maximal: k <= 3 enforced");
    if (min_first < 1) throw std::invalid_argument("enumerate_maximal: min_first must be >= 1");
    std::vector<std::int64_t> acc;
    blocks_rec(k, min_first, max_element, acc, [&] { emit(SchreierSet(acc, k)); });
}

std::vector<SchreierSet> enumerate_maximal(int k, std::int64_t min_first, std::int64_t max_element) {
    std::vector<SchreierSet> out;
    enumerate_maximal(k, min_first, max_element, [&](const SchreierSet& f) { out.push_back(f); });
    return out;
}

}  // namespace aslab
