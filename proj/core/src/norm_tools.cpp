#include <algorithm>
#include <stdexcept>
#include <vector>

#include "aslab/norms.hpp"
#include "aslab/random.hpp"
#include "aslab/schreier.hpp"

namespace aslab {

namespace {

RootValue pair_abs_exact_or_floor(const PairValue& p) {
    if (std::holds_alternative<Rational>(p)) return RootValue(std::get<Rational>(p).abs(), 1);
    if (std::holds_alternative<PthRootCoord>(p)) return std::get<PthRootCoord>(p).abs_root_value();
    return RootValue(pair_abs_lower(p), 1);
}

// |f(x)| / ||x|| as a certified exact lower bound (rational floors where the
// exact quotient is unavailable).
RootValue ratio_lower(const NormParams& params, const FinVec& f, const FinVec& x,
                      const NormOptions& opts) {
    if (x.empty()) return RootValue(Rational(0), 1);
    NormValue nx = norm(params, x, opts);
    PairValue px = pair(f, x, opts.precision_bits);
    RootValue numerator = pair_abs_exact_or_floor(px);
    if (numerator.is_zero()) return RootValue(Rational(0), 1);
    if (nx.is_exact()) return root_div(numerator, nx.exact());
    Rational denom_hi = nx.enclosure().hi().to_rational();
    if (denom_hi.sign() <= 0) return RootValue(Rational(0), 1);
    Rational num_lo = pair_abs_lower(px);
    if (num_lo.sign() <= 0) return RootValue(Rational(0), 1);
    return RootValue(num_lo / denom_hi, 1);
}

}  // namespace

NormValue dual_lower_bound(const NormParams& params, const FinVec& f, const NormOptions& opts) {
    params.validate();
    if (f.empty()) return NormValue(RootValue(Rational(0), 1));
    RootValue best(Rational(0), 1);
    auto consider = [&](const FinVec& x) {
        RootValue r = ratio_lower(params, f, x, opts);
        if (exact_compare(r, best) == Ordering::Greater) best = r;
    };

    std::vector<std::int64_t> supp = f.support();
    for (std::int64_t j : supp) consider(FinVec::basis(j, params.q));

    // sign-matched indicator of supp(f)
    FinVec ind(params.q);
    for (const auto& [i, c] : f.coords()) ind.set(i, Rational(c.sign() >= 0 ? 1 : -1));
    consider(ind);

    // Schreier-weighted candidates S_F^(1/q) patterned on supp(f): the weights
    // come from the maximal initial segment of the support that is maximal
    // in S_k.
    for (int k = 1; k <= 2; ++k) {
        for (std::size_t t = supp.size(); t >= 1; --t) {
            std::vector<std::int64_t> prefix(supp.begin(), supp.begin() + static_cast<long>(t));
            SchreierSet cand(prefix, k);
            if (!is_member(cand)) continue;
            if (!is_maximal(cand)) break;  // shorter prefixes only get smaller
            WeightMap w = weights(cand);
            FinVec x(params.q);
            for (const auto& [j, wj] : w) {
                int s = f.coord(j).sign();
                // w^{1/q} = w * (1/w)^{(q-1)/q}
                x.set(j, PthRootCoord(Rational(s >= 0 ? 1 : -1) * wj, Rational(1) / wj, params.q));
            }
            consider(x);
            break;
        }
    }
    return NormValue(best);
}

namespace {

// One structured element of K_level / L_level with support inside [lo, hi].
FinVec sample_functional(const NormParams& params, int level, std::int64_t lo, std::int64_t hi,
                         RandomSource& rng) {
    auto leaf = [&]() {
        FinVec f(params.q, /*dual=*/true);
        std::int64_t i = rng.uniform(lo, std::min(hi, lo + 3));
        Rational lambda = rng.coin() ? Rational(1) : Rational(1, 2);
        if (rng.coin()) lambda = -lambda;
        f.set(i, lambda);
        return f;
    };
    if (level == 0 || hi - lo < 3 || rng.uniform(0, 3) == 0) return leaf();

    auto n = rng.uniform(2, std::min<std::int64_t>(4, hi - lo));
    std::int64_t cursor = std::max(lo, params.m(n));
    if (cursor + n - 1 > hi) return leaf();

    std::vector<FinVec> children;
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t room = hi - cursor - (n - 1 - i);
        if (room < 0) return leaf();
        std::int64_t width = std::min<std::int64_t>(rng.uniform(1, 4), room + 1);
        FinVec child = sample_functional(params, level - 1, cursor, cursor + width - 1, rng);
        cursor = child.max_support() + 1;
        children.push_back(std::move(child));
    }

    FinVec out(params.q, /*dual=*/true);
    if (params.family == Family::U) {
        // theta n^{-1/p} sum f_i
        PthRootCoord coef(params.theta, Rational(1, n), params.q);
        for (const auto& child : children) {
            for (const auto& [i, c] : child.coords()) out.set(i, c * coef);
        }
        return out;
    }
    // K node: theta sum a_i f_i with (a_i) certified inside B_{l_p^n}
    if (params.q == 1) {
        for (const auto& child : children) {
            Rational a = rng.coin() ? Rational(1) : Rational(1, 2);
            if (rng.coin()) a = -a;
            for (const auto& [i, c] : child.coords()) out.set(i, c.scale(params.theta * a));
        }
        return out;
    }
    int mode = static_cast<int>(rng.uniform(0, 2));
    if (mode == 2) {
        // equal coefficients a_i = n^{-1/p}: sum |a_i|^p = 1 exactly
        PthRootCoord coef(params.theta, Rational(1, n), params.q);
        for (const auto& child : children) {
            PthRootCoord signed_coef = rng.coin() ? coef : coef.negate();
            for (const auto& [i, c] : child.coords()) out.set(i, c * signed_coef);
        }
        return out;
    }
    // rational point: |a_i| = c_i / sum c_j has l_1 norm <= 1, hence l_p norm <= 1
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    std::int64_t total = 0;
    for (auto& ci : c) {
        ci = rng.uniform(1, 3);
        total += ci;
    }
    for (std::int64_t i = 0; i < n; ++i) {
        Rational a(rng.sign() * c[static_cast<std::size_t>(i)], total);
        for (const auto& [j, cc] : children[static_cast<std::size_t>(i)].coords())
            out.set(j, cc.scale(params.theta * a));
    }
    return out;
}

}  // namespace

std::vector<FinVec> norming_sample(const NormParams& params, int level, std::int64_t support_bound,
                                   int budget, std::uint64_t seed) {
    params.validate();
    if (level < 0 || level > 4) throw std::invalid_argument("norming_sample: level <= 4 enforced");
    if (support_bound < 1) throw std::invalid_argument("norming_sample: support bound must be >= 1");
    RandomSource rng(seed);
    std::vector<FinVec> out;
    out.reserve(static_cast<std::size_t>(std::max(budget, 0)));
    for (int i = 0; i < budget; ++i) out.push_back(sample_functional(params, level, 1, support_bound, rng));
    return out;
}

namespace {

// Certified check |f(x)| > ||x||, refining precision before giving up.
bool certified_violation(const NormParams& params, const FinVec& f, const FinVec& x,
                         const NormOptions& opts) {
    if (x.empty()) return false;
    PairValue p = pair(f, x, opts.precision_bits);
    NormValue nx = norm(params, x, opts);
    if (pair_is_exact(p) && nx.is_exact()) {
        RootValue lhs = pair_abs_exact_or_floor(p);
        return exact_compare(lhs, nx.exact()) == Ordering::Greater;
    }
    for (int bits = opts.precision_bits; bits <= 256; bits *= 2) {
        NormOptions o = opts;
        o.precision_bits = bits;
        CertScalar lhs = pair_abs(pair(f, x, bits), bits);
        CertScalar rhs = [&] {
            NormValue nv = norm(params, x, o);
            return nv.is_exact() ? CertScalar(nv.exact()) : CertScalar(nv.enclosure());
        }();
        switch (compare(lhs, rhs)) {
            case CertOrder::Greater: return true;  // |f(x)| > ||x|| certified
            case CertOrder::Less:
            case CertOrder::Equal: return false;
            case CertOrder::Undecided: break;
        }
    }
    return false;  // undecided at precision cap: not a certified violation
}

}  // namespace

BallTestResult ball_membership_test(const NormParams& params, const FinVec& f, int trials,
                                    std::uint64_t seed, const NormOptions& opts) {
    params.validate();
    if (f.empty()) return {};
    RandomSource rng(seed);
    std::vector<FinVec> candidates;

    for (std::int64_t j : f.support()) candidates.push_back(FinVec::basis(j, params.q));
    FinVec ind(params.q);
    for (const auto& [i, c] : f.coords()) ind.set(i, Rational(c.sign() >= 0 ? 1 : -1));
    candidates.push_back(ind);

    std::int64_t hi = f.max_support() + 3;
    for (int t = 0; t < trials; ++t) {
        FinVec x(params.q);
        int support = static_cast<int>(rng.uniform(1, 6));
        std::int64_t idx = rng.uniform(1, std::max<std::int64_t>(2, hi / 2));
        for (int s = 0; s < support && idx <= hi; ++s) {
            x.set(idx, rng.small_rational());
            idx += rng.uniform(1, 3);
        }
        if (!x.empty()) candidates.push_back(std::move(x));
    }

    for (const FinVec& x : candidates) {
        if (certified_violation(params, f, x, opts)) return BallTestResult{x};
    }
    return {};
}

}  // namespace aslab
