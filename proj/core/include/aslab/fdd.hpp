#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "aslab/cert_scalar.hpp"
#include "aslab/norms.hpp"

namespace aslab {

// Weighted l_r norm over all coordinates; missing weights default to 1.
struct LrNorm {
    enum class R { L1, L2, Linf };
    R r = R::L2;
    std::map<std::int64_t, Rational> weights;

    LrNorm dual() const;
};

using BlockNormTag = std::variant<LrNorm, NormParams>;

// A finite block structure: block n occupies a contiguous coordinate range,
// interval projections act by coordinate restriction (bimonotone by
// construction). Base norm measures vectors, outer norm measures profiles.
struct BlockStructure {
    std::vector<int> block_sizes;
    BlockNormTag base;
    BlockNormTag outer;

    int block_count() const { return static_cast<int>(block_sizes.size()); }
    std::int64_t coord_count() const;
    std::pair<std::int64_t, std::int64_t> block_range(int n) const;       // 1-based block
    std::pair<std::int64_t, std::int64_t> blocks_range(int lo, int hi) const;
    void validate() const;

    bool outer_is_lr() const { return std::holds_alternative<LrNorm>(outer); }
    // Dual structure for lift-up evaluation of functionals.
    BlockStructure dual() const;
};

using BlockVec = FinVec;

// Base norm of (a restriction of) a block vector, at global coordinates.
CertScalar base_norm(const BlockStructure& s, const BlockVec& z, const NormOptions& opts = {});

// sup over families of disjoint increasing block-interval families of the
// outer norm of the profile sum ||I_i z|| e_{min I_i}.
NormValue lift_up_norm(const BlockStructure& s, const BlockVec& z, const NormOptions& opts = {});

// inf over interval partitions covering the block line of the outer norm of
// the partition profile.
NormValue press_bracket(const BlockStructure& s, const BlockVec& z, const NormOptions& opts = {});

// Certified two-sided bracket for the press norm: upper from searched
// decompositions into block-interval restrictions (at most `budget` parts),
// lower from single-block unit functionals.
struct PressBounds {
    NormValue lower;
    NormValue upper;
};
PressBounds press_norm_bounds(const BlockStructure& s, const BlockVec& z, int budget,
                              const NormOptions& opts = {});

enum class DualityVerdict { HoldsCertified, FailsCertified, Undecided };

// Certifies |<f, z>| <= lift_up(dual structure, f) * press_upper(z).
// Requires an l_r outer norm (its dual is exactly computable).
DualityVerdict duality_check(const BlockStructure& s, const BlockVec& f, const BlockVec& z,
                             const NormOptions& opts = {});

}  // namespace aslab
