#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "aslab/rational.hpp"

namespace aslab {

// A finite set of positive integers together with the order k at which it is
// considered: S_0 = {} and singletons, S_{k+1} = unions of n successive
// S_k-sets E_1 < ... < E_n with n <= min E_1.
struct SchreierSet {
    std::vector<std::int64_t> elements;  // strictly increasing
    int order = 0;

    SchreierSet() = default;
    SchreierSet(std::vector<std::int64_t> elems, int k);

    bool empty() const { return elements.empty(); }
    std::int64_t min() const { return elements.front(); }
    std::int64_t max() const { return elements.back(); }
};

// Rational weights S^k_F on a maximal set F; support equals F, sums to 1.
using WeightMap = std::map<std::int64_t, Rational>;

// Membership in S_k, decided by memoized decomposition search.
bool is_member(const SchreierSet& f);

// F in MAX(S_k): no proper superset lies in S_k. Rejects F not in S_k.
bool is_maximal(const SchreierSet& f);

// The recursive weight function S^k_F for F in MAX(S_k).
WeightMap weights(const SchreierSet& f);

// For F in MAX(S_{k+l}) given at order k+l: split into successive blocks of
// order l, each the maximal initial segment of the remaining tail lying in
// S_l. The block minima then form a set in MAX(S_k).
std::vector<SchreierSet> greedy_decompose(const SchreierSet& f, int l);

// Every F in MAX(S_k) with min F == min_first and max F <= max_element,
// exactly once, in lexicographic order. k <= 3 enforced.
void enumerate_maximal(int k, std::int64_t min_first, std::int64_t max_element,
                       const std::function<void(const SchreierSet&)>& emit);
std::vector<SchreierSet> enumerate_maximal(int k, std::int64_t min_first, std::int64_t max_element);

}  // namespace aslab
