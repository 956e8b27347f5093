#include "aslab/norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace aslab {

std::int64_t NormParams::m(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("NormParams::m: n must be >= 1");
    if (m_prefix.empty()) return n;
    auto k = static_cast<std::int64_t>(m_prefix.size());
    if (n <= k) return m_prefix[static_cast<std::size_t>(n - 1)];
    return m_prefix.back() + (n - k);
}

Rational NormParams::base_weight() const {
    if (family == Family::U || convention == Convention::ThetaDirect || q == 1) return theta;
    return theta.pow(static_cast<long>(q));
}

void NormParams::validate() const {
    if (q < 1) throw std::invalid_argument("NormParams: q must be a positive integer");
    if (!(Rational(0) < theta && theta < Rational(1)))
        throw std::invalid_argument("NormParams: theta must lie in (0,1)");
    for (std::size_t i = 0; i < m_prefix.size(); ++i) {
        if (m_prefix[i] < 1 || (i > 0 && m_prefix[i] <= m_prefix[i - 1]))
            throw std::invalid_argument("NormParams: M must be strictly increasing and positive");
    }
}

CertInterval NormValue::to_interval(int bits) const {
    if (is_exact()) return enclose(exact(), bits);
    return enclosure();
}

bool NormValue::is_zero() const {
    if (is_exact()) return exact().is_zero();
    return enclosure().lo().is_zero() && enclosure().hi().is_zero();
}

std::string NormValue::str() const { return is_exact() ? exact().str() : enclosure().str(); }

CertOrder compare_norms(const NormValue& a, const NormValue& b, const Rational& scale_a,
                        const Rational& scale_b) {
    if (scale_a.sign() < 0 || scale_b.sign() < 0)
        throw std::invalid_argument("compare_norms: scales must be nonnegative");
    if (a.is_exact() && b.is_exact()) {
        switch (exact_compare(a.exact().scale(scale_a), b.exact().scale(scale_b))) {
            case Ordering::Less: return CertOrder::Less;
            case Ordering::Equal: return CertOrder::Equal;
            case Ordering::Greater: return CertOrder::Greater;
        }
    }
    int bits = 64;
    if (!a.is_exact()) bits = std::max(bits, a.enclosure().bits());
    if (!b.is_exact()) bits = std::max(bits, b.enclosure().bits());
    CertInterval ia = a.to_interval(bits).scale(scale_a);
    CertInterval ib = b.to_interval(bits).scale(scale_b);
    if (ia.is_point() && ib.is_point() && ia.lo() == ib.lo()) return CertOrder::Equal;
    switch (interval_compare(ia, ib)) {
        case IntervalOrder::Less: return CertOrder::Less;
        case IntervalOrder::Greater: return CertOrder::Greater;
        case IntervalOrder::Undecided: return CertOrder::Undecided;
    }
    return CertOrder::Undecided;
}

std::vector<IntervalFamily> admissible_families(const NormParams& params, std::int64_t lo,
                                                std::int64_t hi, int n) {
    params.validate();
    int nmin = params.family == Family::U ? 2 : 1;
    if (n < nmin) throw std::invalid_argument("admissible_families: n below the family minimum");
    std::vector<IntervalFamily> out;
    if (lo > hi) return out;
    std::int64_t first_min = std::max(lo, params.m(n));
    std::vector<std::pair<std::int64_t, std::int64_t>> acc;
    constexpr std::size_t kMaxFamilies = 2'000'000;
    std::function<void(std::int64_t, int)> rec = [&](std::int64_t cursor, int remaining) {
        if (remaining == 0) {
            if (out.size() >= kMaxFamilies)
                throw std::overflow_error("admissible_families: family count guard exceeded");
            out.push_back(IntervalFamily{acc});
            return;
        }
        std::int64_t start_lo = acc.empty() ? first_min : cursor;
        for (std::int64_t a = start_lo; a + remaining - 1 <= hi; ++a) {
            for (std::int64_t b = a; b + remaining - 1 <= hi; ++b) {
                acc.emplace_back(a, b);
                rec(b + 1, remaining - 1);  // next interval starts past b (disjoint, increasing)
                acc.pop_back();
            }
        }
    };
    rec(first_min, n);
    return out;
}

namespace {

// Terms grouped so that each bucket is an exact PthRootCoord; buckets that
// never merge force the interval fallback.
struct PairAccumulator {
    std::vector<PthRootCoord> buckets;

    void push(const PthRootCoord& t) {
        if (t.is_zero()) return;
        for (auto& b : buckets) {
            if (auto s = b.add_same_base(t)) {
                b = *s;
                return;
            }
        }
        buckets.push_back(t);
    }
};

}  // namespace

PairValue pair(const FinVec& f, const FinVec& x, int precision_bits) {
    const FinVec* pf = &f;
    const FinVec* px = &x;
    FinVec retagged(1);
    if (f.q() != x.q()) {
        // rational-kind vectors can be re-read at any q (base-1 coordinates)
        if (f.kind() == CoordKind::Rational) {
            retagged = FinVec(x.q(), f.dual());
            for (const auto& [i, c] : f.coords()) retagged.set(i, c.coeff());
            pf = &retagged;
        } else if (x.kind() == CoordKind::Rational) {
            retagged = FinVec(f.q(), x.dual());
            for (const auto& [i, c] : x.coords()) retagged.set(i, c.coeff());
            px = &retagged;
        } else {
            throw std::invalid_argument("pair: incompatible coordinate q");
        }
    }
    PairAccumulator acc;
    const auto& small = pf->coords().size() <= px->coords().size() ? pf->coords() : px->coords();
    const auto& other = pf->coords().size() <= px->coords().size() ? px->coords() : pf->coords();
    for (const auto& [i, c] : small) {
        auto it = other.find(i);
        if (it == other.end()) continue;
        acc.push(c * it->second);
    }
    if (acc.buckets.empty()) return Rational(0);
    if (acc.buckets.size() == 1) {
        if (auto r = acc.buckets.front().as_rational()) return *r;
        return acc.buckets.front();
    }
    CertInterval sum = CertInterval::exact_zero(precision_bits);
    for (const auto& b : acc.buckets) sum = sum + enclose(b, precision_bits);
    return sum;
}

Rational pair_abs_lower(const PairValue& p) {
    if (std::holds_alternative<Rational>(p)) return std::get<Rational>(p).abs();
    if (std::holds_alternative<PthRootCoord>(p)) {
        const auto& c = std::get<PthRootCoord>(p);
        CertInterval iv = enclose(c.abs(), 64);
        if (auto r = c.abs().as_rational()) return *r;
        return iv.lo().to_rational();
    }
    const auto& iv = std::get<CertInterval>(p);
    Rational lo = iv.lo().to_rational(), hi = iv.hi().to_rational();
    if (lo.sign() >= 0) return lo;          // interval entirely >= 0
    if (hi.sign() <= 0) return hi.abs();    // entirely <= 0
    return Rational(0);                     // straddles zero: |p| >= 0 only
}

CertScalar pair_abs(const PairValue& p, int bits) {
    if (std::holds_alternative<Rational>(p)) return CertScalar::exact(std::get<Rational>(p).abs());
    if (std::holds_alternative<PthRootCoord>(p))
        return CertScalar(std::get<PthRootCoord>(p).abs_root_value());
    const auto& iv = std::get<CertInterval>(p);
    Dyadic lo = iv.lo(), hi = iv.hi();
    if (lo.sign() >= 0) return CertScalar(iv);
    if (hi.sign() <= 0) return CertScalar(CertInterval(-hi, -lo, bits));
    return CertScalar(CertInterval(Dyadic(0), (-lo) < hi ? hi : -lo, bits));
}

bool pair_is_exact(const PairValue& p) { return !std::holds_alternative<CertInterval>(p); }

}  // namespace aslab
