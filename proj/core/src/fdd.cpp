#include "aslab/fdd.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace aslab {

LrNorm LrNorm::dual() const {
    LrNorm d;
    switch (r) {
        case R::L1: d.r = R::Linf; break;
        case R::Linf: d.r = R::L1; break;
        case R::L2: d.r = R::L2; break;
    }
    for (const auto& [i, w] : weights) d.weights.emplace(i, Rational(1) / w);
    return d;
}

std::int64_t BlockStructure::coord_count() const {
    std::int64_t n = 0;
    for (int s : block_sizes) n += s;
    return n;
}

std::pair<std::int64_t, std::int64_t> BlockStructure::block_range(int n) const {
    return blocks_range(n, n);
}

std::pair<std::int64_t, std::int64_t> BlockStructure::blocks_range(int lo, int hi) const {
    std::int64_t a = 1;
    for (int i = 1; i < lo; ++i) a += block_sizes[static_cast<std::size_t>(i - 1)];
    std::int64_t b = a - 1;
    for (int i = lo; i <= hi; ++i) b += block_sizes[static_cast<std::size_t>(i - 1)];
    return {a, b};
}

void BlockStructure::validate() const {
    if (block_sizes.empty()) throw std::invalid_argument("BlockStructure: no blocks");
    for (int s : block_sizes) {
        if (s < 1) throw std::invalid_argument("BlockStructure: block sizes must be positive");
    }
    if (auto* lr = std::get_if<LrNorm>(&base)) {
        for (const auto& [i, w] : lr->weights) {
            if (w.sign() <= 0) throw std::invalid_argument("BlockStructure: weights must be positive");
        }
    }
    if (auto* np = std::get_if<NormParams>(&base)) np->validate();
    if (auto* np = std::get_if<NormParams>(&outer)) np->validate();
}

BlockStructure BlockStructure::dual() const {
    if (!outer_is_lr()) throw std::invalid_argument("BlockStructure::dual: outer norm must be l_r");
    if (!std::holds_alternative<LrNorm>(base))
        throw std::invalid_argument("BlockStructure::dual: base norm must be l_r");
    BlockStructure d;
    d.block_sizes = block_sizes;
    d.base = std::get<LrNorm>(base).dual();
    d.outer = std::get<LrNorm>(outer).dual();
    return d;
}

namespace {

Rational weight_at(const LrNorm& n, std::int64_t i) {
    auto it = n.weights.find(i);
    return it == n.weights.end() ? Rational(1) : it->second;
}

CertScalar lr_norm_of_vec(const LrNorm& n, const BlockVec& z, int bits) {
    CertScalar acc = CertScalar::exact(Rational(0));
    for (const auto& [i, c] : z.coords()) {
        CertScalar mag(c.abs_root_value());
        switch (n.r) {
            case LrNorm::R::L1:
                acc = CertScalar::add(acc, mag.scale(weight_at(n, i), bits), bits);
                break;
            case LrNorm::R::L2:
                acc = CertScalar::add(acc, CertScalar::mul(mag, mag, bits).scale(weight_at(n, i), bits), bits);
                break;
            case LrNorm::R::Linf:
                acc = CertScalar::max(acc, mag.scale(weight_at(n, i), bits), bits);
                break;
        }
    }
    if (n.r == LrNorm::R::L2) acc = acc.root(2, bits);
    return acc;
}

CertScalar norm_value_to_scalar(const NormValue& v) {
    if (v.is_exact()) return CertScalar(v.exact());
    return CertScalar(v.enclosure());
}

// Outer l_r norm of a profile (unweighted; profiles are measured against the
// normalized outer basis).
CertScalar lr_norm_of_profile(const LrNorm& n, const std::map<std::int64_t, CertScalar>& profile,
                              int bits) {
    CertScalar acc = CertScalar::exact(Rational(0));
    for (const auto& [i, v] : profile) {
        switch (n.r) {
            case LrNorm::R::L1: acc = CertScalar::add(acc, v, bits); break;
            case LrNorm::R::L2: acc = CertScalar::add(acc, CertScalar::mul(v, v, bits), bits); break;
            case LrNorm::R::Linf: acc = CertScalar::max(acc, v, bits); break;
        }
    }
    if (n.r == LrNorm::R::L2) acc = acc.root(2, bits);
    return acc;
}

CertScalar outer_norm_of_profile(const BlockStructure& s, const std::map<std::int64_t, CertScalar>& profile,
                                 const NormOptions& opts) {
    if (const auto* lr = std::get_if<LrNorm>(&s.outer)) {
        return lr_norm_of_profile(*lr, profile, opts.precision_bits);
    }
    return norm_value_to_scalar(profile_norm(std::get<NormParams>(s.outer), profile, opts));
}

bool certainly_ge(const CertScalar& a, const CertScalar& b) {
    CertOrder o = compare(a, b);
    return o == CertOrder::Greater || o == CertOrder::Equal;
}

}  // namespace

CertScalar base_norm(const BlockStructure& s, const BlockVec& z, const NormOptions& opts) {
    if (const auto* lr = std::get_if<LrNorm>(&s.base)) {
        return lr_norm_of_vec(*lr, z, opts.precision_bits);
    }
    return norm_value_to_scalar(norm(std::get<NormParams>(s.base), z, opts));
}

namespace {

// Interval content norms cost[i][j] = base norm of blocks i..j (1-based).
std::vector<std::vector<CertScalar>> interval_costs(const BlockStructure& s, const BlockVec& z,
                                                    const NormOptions& opts) {
    int B = s.block_count();
    std::vector<std::vector<CertScalar>> cost(static_cast<std::size_t>(B + 1),
                                              std::vector<CertScalar>(static_cast<std::size_t>(B + 1)));
    for (int i = 1; i <= B; ++i) {
        for (int j = i; j <= B; ++j) {
            auto [lo, hi] = s.blocks_range(i, j);
            cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                base_norm(s, z.restrict_to(lo, hi), opts);
        }
    }
    return cost;
}

// Enumeration of families (lift-up: any disjoint increasing intervals) or
// partitions (bracket: consecutive cover) for non-l_r outer norms, with
// branch-and-bound pruning on the profile prefix.
struct Enumerator {
    const BlockStructure& s;
    const NormOptions& opts;
    const std::vector<std::vector<CertScalar>>& cost;
    int B;

    CertScalar best;
    bool have_best = false;

    void consider(const std::map<std::int64_t, CertScalar>& profile, bool maximize) {
        CertScalar v = outer_norm_of_profile(s, profile, opts);
        if (!have_best) {
            best = v;
            have_best = true;
        } else {
            best = maximize ? CertScalar::max(best, v, opts.precision_bits)
                            : CertScalar::min(best, v, opts.precision_bits);
        }
    }

    // all families of disjoint increasing intervals, maximizing
    void families(int from, std::map<std::int64_t, CertScalar>& profile) {
        consider(profile, true);
        for (int i = from; i <= B; ++i) {
            for (int j = i; j <= B; ++j) {
                profile[i] = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                families(j + 1, profile);
                profile.erase(i);
            }
        }
    }

    // partitions covering [1..B], minimizing; prefix outer norm is monotone in
    // added coordinates, so a prefix already >= best cannot improve.
    void partitions(int from, std::map<std::int64_t, CertScalar>& profile) {
        if (from > B) {
            consider(profile, false);
            return;
        }
        if (have_best) {
            CertScalar prefix = outer_norm_of_profile(s, profile, opts);
            if (certainly_ge(prefix, best)) return;
        }
        for (int j = from; j <= B; ++j) {
            profile[from] = cost[static_cast<std::size_t>(from)][static_cast<std::size_t>(j)];
            partitions(j + 1, profile);
            profile.erase(from);
        }
    }
};

CertScalar lift_up_scalar(const BlockStructure& s, const BlockVec& z, const NormOptions& opts) {
    int B = s.block_count();
    auto cost = interval_costs(s, z, opts);
    int bits = opts.precision_bits;
    if (const auto* lr = std::get_if<LrNorm>(&s.outer)) {
        if (lr->r == LrNorm::R::Linf) {
            // best family is a single interval
            CertScalar best = CertScalar::exact(Rational(0));
            for (int i = 1; i <= B; ++i)
                for (int j = i; j <= B; ++j)
                    best = CertScalar::max(best, cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], bits);
            return best;
        }
        unsigned r = lr->r == LrNorm::R::L1 ? 1 : 2;
        // f[i]: best r-th-power sum over families inside blocks [i..B]
        std::vector<CertScalar> f(static_cast<std::size_t>(B + 2), CertScalar::exact(Rational(0)));
        for (int i = B; i >= 1; --i) {
            CertScalar best = f[static_cast<std::size_t>(i + 1)];  // skip block i
            for (int j = i; j <= B; ++j) {
                CertScalar cand = CertScalar::add(
                    cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].pow_ui(r, bits),
                    f[static_cast<std::size_t>(j + 1)], bits);
                best = CertScalar::max(best, cand, bits);
            }
            f[static_cast<std::size_t>(i)] = best;
        }
        return f[1].root(r, bits);
    }
    Enumerator e{s, opts, cost, B};
    std::map<std::int64_t, CertScalar> profile;
    e.families(1, profile);
    return e.best;
}

CertScalar press_bracket_scalar(const BlockStructure& s, const BlockVec& z, const NormOptions& opts) {
    int B = s.block_count();
    auto cost = interval_costs(s, z, opts);
    int bits = opts.precision_bits;
    if (const auto* lr = std::get_if<LrNorm>(&s.outer)) {
        if (lr->r == LrNorm::R::Linf) {
            // g[i]: min over partitions of [i..B] of the max profile entry
            std::vector<CertScalar> g(static_cast<std::size_t>(B + 2), CertScalar::exact(Rational(0)));
            for (int i = B; i >= 1; --i) {
                bool have = false;
                CertScalar best;
                for (int j = i; j <= B; ++j) {
                    CertScalar cand = CertScalar::max(
                        cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        g[static_cast<std::size_t>(j + 1)], bits);
                    best = have ? CertScalar::min(best, cand, bits) : cand;
                    have = true;
                }
                g[static_cast<std::size_t>(i)] = best;
            }
            return g[1];
        }
        unsigned r = lr->r == LrNorm::R::L1 ? 1 : 2;
        std::vector<CertScalar> g(static_cast<std::size_t>(B + 2), CertScalar::exact(Rational(0)));
        for (int i = B; i >= 1; --i) {
            bool have = false;
            CertScalar best;
            for (int j = i; j <= B; ++j) {
                CertScalar cand = CertScalar::add(
                    cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].pow_ui(r, bits),
                    g[static_cast<std::size_t>(j + 1)], bits);
                best = have ? CertScalar::min(best, cand, bits) : cand;
                have = true;
            }
            g[static_cast<std::size_t>(i)] = best;
        }
        return g[1].root(r, bits);
    }
    Enumerator e{s, opts, cost, B};
    std::map<std::int64_t, CertScalar> profile;
    e.partitions(1, profile);
    return e.best;
}

NormValue scalar_to_norm_value(const CertScalar& v) {
    if (v.is_exact()) return NormValue(v.root_value());
    return NormValue(v.interval());
}

}  // namespace

NormValue lift_up_norm(const BlockStructure& s, const BlockVec& z, const NormOptions& opts) {
    s.validate();
    if (s.block_count() > 20) throw std::invalid_argument("lift_up_norm: block cap 20 exceeded");
    if (z.empty()) return NormValue(RootValue(Rational(0), 1));
    return scalar_to_norm_value(lift_up_scalar(s, z, opts));
}

NormValue press_bracket(const BlockStructure& s, const BlockVec& z, const NormOptions& opts) {
    s.validate();
    if (s.block_count() > 20) throw std::invalid_argument("press_bracket: block cap 20 exceeded");
    if (z.empty()) return NormValue(RootValue(Rational(0), 1));
    return scalar_to_norm_value(press_bracket_scalar(s, z, opts));
}

PressBounds press_norm_bounds(const BlockStructure& s, const BlockVec& z, int budget,
                              const NormOptions& opts) {
    s.validate();
    int B = s.block_count();
    if (B > 20) throw std::invalid_argument("press_norm_bounds: block cap 20 exceeded");
    if (z.empty())
        return PressBounds{NormValue(RootValue(Rational(0), 1)), NormValue(RootValue(Rational(0), 1))};
    int bits = opts.precision_bits;

    // lower bound: single-block unit functionals f give |f(z)| = ||z_n||_base
    CertScalar lower = CertScalar::exact(Rational(0));
    for (int n = 1; n <= B; ++n) {
        auto [lo, hi] = s.block_range(n);
        lower = CertScalar::max(lower, base_norm(s, z.restrict_to(lo, hi), opts), bits);
    }

    // upper bound: min over decompositions into consecutive block-interval
    // restrictions (at most `budget` parts) of the bracket sum
    if (budget < 1) budget = 1;
    budget = std::min(budget, B);
    std::vector<std::vector<CertScalar>> bracket(static_cast<std::size_t>(B + 1),
                                                 std::vector<CertScalar>(static_cast<std::size_t>(B + 1)));
    for (int i = 1; i <= B; ++i) {
        for (int j = i; j <= B; ++j) {
            auto [lo, hi] = s.blocks_range(i, j);
            BlockVec part = z.restrict_to(lo, hi);
            bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                part.empty() ? CertScalar::exact(Rational(0)) : press_bracket_scalar(s, part, opts);
        }
    }
    // h[i][t]: min bracket sum covering blocks [i..B] with at most t parts
    std::vector<std::vector<std::pair<bool, CertScalar>>> h(
        static_cast<std::size_t>(B + 2),
        std::vector<std::pair<bool, CertScalar>>(static_cast<std::size_t>(budget + 1),
                                                 {false, CertScalar()}));
    for (int t = 0; t <= budget; ++t) h[static_cast<std::size_t>(B + 1)][static_cast<std::size_t>(t)] = {true, CertScalar::exact(Rational(0))};
    for (int i = B; i >= 1; --i) {
        for (int t = 1; t <= budget; ++t) {
            bool have = false;
            CertScalar best;
            for (int j = i; j <= B; ++j) {
                auto& tail = h[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(t - 1)];
                if (!tail.first) continue;
                CertScalar cand = CertScalar::add(
                    bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], tail.second, bits);
                best = have ? CertScalar::min(best, cand, bits) : cand;
                have = true;
            }
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = {have, best};
        }
        h[static_cast<std::size_t>(i)][0] = {false, CertScalar()};
    }
    CertScalar upper = h[1][static_cast<std::size_t>(budget)].second;
    return PressBounds{scalar_to_norm_value(lower), scalar_to_norm_value(upper)};
}

DualityVerdict duality_check(const BlockStructure& s, const BlockVec& f, const BlockVec& z,
                             const NormOptions& opts) {
    s.validate();
    if (!s.outer_is_lr() || !std::holds_alternative<LrNorm>(s.base))
        throw std::invalid_argument("duality_check: requires l_r outer and base norms");
    if (f.empty() || z.empty()) return DualityVerdict::HoldsCertified;

    PairValue p = pair(f, z, opts.precision_bits);
    BlockStructure ds = s.dual();

    for (int bits = opts.precision_bits; bits <= 256; bits *= 2) {
        NormOptions o = opts;
        o.precision_bits = bits;
        CertScalar lhs = pair_abs(std::holds_alternative<CertInterval>(p) ? pair(f, z, bits) : p, bits);
        CertScalar lift = norm_value_to_scalar(lift_up_norm(ds, f, o));
        CertScalar upper = norm_value_to_scalar(press_norm_bounds(s, z, s.block_count(), o).upper);
        CertScalar rhs = CertScalar::mul(lift, upper, bits);
        switch (compare(lhs, rhs)) {
            case CertOrder::Less:
            case CertOrder::Equal:
                return DualityVerdict::HoldsCertified;
            case CertOrder::Greater:
                return DualityVerdict::FailsCertified;
            case CertOrder::Undecided:
                break;
        }
    }
    return DualityVerdict::Undecided;
}

}  // namespace aslab
