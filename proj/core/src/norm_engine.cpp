#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "aslab/norms.hpp"

// Evaluation of the implicitly defined model norms. Two routes:
//
//  - norm(): per-level interval DP over support-aligned segments. At each
//    level, E[a][n] holds the best sum of previous-level segment norms over
//    partitions of support positions [a..v] into exactly n consecutive
//    chunks; admissibility only constrains (n, index of a). Levels iterate
//    to a fixpoint, which must arrive by |supp|+1 (asserted).
//
//  - norm_bruteforce(): level-bounded direct enumeration of all families of
//    disjoint support runs (gaps allowed anywhere, n = 1 included where the
//    definition permits), memoized only on (segment, level). Serves as the
//    independent oracle for the DP.

namespace aslab {

namespace {

struct TPolicy {
    using Value = Rational;
    Rational w;
    static constexpr int nmin_dp = 2;     // n = 1 never beats the previous level (w < 1)
    static constexpr int nmin_brute = 1;  // the definition allows it; kept in the oracle

    Value level0(const PthRootCoord& c) const { return c.abs_qth_power(); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value vmax(const Value& a, const Value& b) const { return a < b ? b : a; }
    Value combine(std::int64_t, const Value& sum) const { return w * sum; }
    bool same(const Value& a, const Value& b) const { return a == b; }
    void check_monotone(const Value& prev, const Value& cur) const {
        if (cur < prev) throw std::logic_error("norm: level iteration decreased");
    }
};

// Base T recursion over certified scalars (for block profiles whose
// coordinates are q-th powers of irrational block norms).
struct TScalarPolicy {
    using Value = CertScalar;
    Rational w;
    int bits;
    static constexpr int nmin_dp = 2;
    static constexpr int nmin_brute = 1;

    Value add(const Value& a, const Value& b) const { return CertScalar::add(a, b, bits); }
    Value vmax(const Value& a, const Value& b) const { return CertScalar::max(a, b, bits); }
    Value combine(std::int64_t, const Value& sum) const { return sum.scale(w, bits); }
    bool same(const Value& a, const Value& b) const { return CertScalar::same_repr(a, b); }
    void check_monotone(const Value& prev, const Value& cur) const {
        if (prev.is_exact() && cur.is_exact() &&
            exact_compare(cur.root_value(), prev.root_value()) == Ordering::Less)
            throw std::logic_error("norm: level iteration decreased");
    }
};

struct UPolicy {
    using Value = CertScalar;
    Rational theta;
    unsigned q;
    int bits;
    static constexpr int nmin_dp = 2;
    static constexpr int nmin_brute = 2;  // the U recursion requires n >= 2

    Value level0(const PthRootCoord& c) const { return CertScalar(c.abs_root_value()); }
    Value add(const Value& a, const Value& b) const { return CertScalar::add(a, b, bits); }
    Value vmax(const Value& a, const Value& b) const { return CertScalar::max(a, b, bits); }
    Value combine(std::int64_t n, const Value& sum) const {
        // theta * n^{-1/p} = (theta^q / n^(q-1))^(1/q)
        RootValue coef(theta.pow(static_cast<long>(q)) / Rational(n).pow(static_cast<long>(q) - 1), q);
        return CertScalar::mul(CertScalar(coef), sum, bits);
    }
    bool same(const Value& a, const Value& b) const { return CertScalar::same_repr(a, b); }
    void check_monotone(const Value& prev, const Value& cur) const {
        if (prev.is_exact() && cur.is_exact() &&
            exact_compare(cur.root_value(), prev.root_value()) == Ordering::Less)
            throw std::logic_error("norm: level iteration decreased");
    }
};

// Largest n with m(n) <= index, capped by the number of support points.
std::vector<int> admissibility_caps(const NormParams& params, const std::vector<std::int64_t>& idx) {
    auto m = static_cast<int>(idx.size());
    std::vector<int> cap(idx.size(), 0);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        int n = 0;
        while (n < m && params.m(n + 1) <= idx[a]) ++n;
        cap[a] = n;
    }
    return cap;
}

template <class P>
typename P::Value dp_fixpoint(const NormParams& params, const std::vector<std::int64_t>& idx,
                              const std::vector<typename P::Value>& c0, const P& pol) {
    using Value = typename P::Value;
    auto m = c0.size();
    std::vector<int> cap = admissibility_caps(params, idx);
    auto at = [m](std::size_t u, std::size_t v) { return u * m + v; };

    std::vector<Value> prev(m * m);
    for (std::size_t u = 0; u < m; ++u) {
        Value running = c0[u];
        prev[at(u, u)] = running;
        for (std::size_t v = u + 1; v < m; ++v) {
            running = pol.vmax(running, c0[v]);
            prev[at(u, v)] = running;
        }
    }

    std::vector<Value> cur(m * m);
    for (std::size_t level = 1;; ++level) {
        if (level > m + 1)
            throw std::logic_error("norm: no fixpoint by level |supp|+1");
        bool changed = false;
        for (std::size_t v = 0; v < m; ++v) {
            // E[a][n], flattened: partitions of positions [a..v] into exactly n chunks
            std::vector<Value> E((v + 1) * (v + 2));
            auto eat = [v](std::size_t a, std::size_t n) { return a * (v + 2) + n; };
            for (std::size_t a = v + 1; a-- > 0;) {
                E[eat(a, 1)] = prev[at(a, v)];
                for (std::size_t n = 2; n <= v - a + 1; ++n) {
                    Value best;
                    bool have = false;
                    for (std::size_t g = a; g + (n - 1) <= v; ++g) {
                        Value cand = pol.add(prev[at(a, g)], E[eat(g + 1, n - 1)]);
                        best = have ? pol.vmax(best, cand) : cand;
                        have = true;
                    }
                    E[eat(a, n)] = best;
                }
            }
            // byA[a]: best admissible combination starting at position a
            std::vector<Value> byA(v + 1);
            std::vector<bool> hasA(v + 1, false);
            for (std::size_t a = 0; a <= v; ++a) {
                auto top = std::min<std::size_t>(static_cast<std::size_t>(cap[a]), v - a + 1);
                for (std::size_t n = P::nmin_dp; n <= top; ++n) {
                    Value cand = pol.combine(static_cast<std::int64_t>(n), E[eat(a, n)]);
                    byA[a] = hasA[a] ? pol.vmax(byA[a], cand) : cand;
                    hasA[a] = true;
                }
            }
            // suffix max over a, then fold against the previous level
            for (std::size_t u = v + 1; u-- > 0;) {
                Value best = prev[at(u, v)];
                for (std::size_t a = u; a <= v; ++a) {
                    if (hasA[a]) best = pol.vmax(best, byA[a]);
                }
                pol.check_monotone(prev[at(u, v)], best);
                if (!pol.same(best, prev[at(u, v)])) changed = true;
                cur[at(u, v)] = best;
            }
        }
        if (!changed) break;
        std::swap(prev, cur);
    }
    return prev[at(0, m - 1)];
}

template <class P>
class BruteForce {
  public:
    using Value = typename P::Value;

    BruteForce(const NormParams& params, const std::vector<std::int64_t>& idx,
               const std::vector<Value>& c0, const P& pol)
        : params_(params), idx_(idx), c0_(c0), pol_(pol), caps_(admissibility_caps(params, idx)) {}

    Value eval(std::size_t a, std::size_t b, int level) {
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) |
                            (static_cast<std::uint64_t>(b) << 16) | static_cast<unsigned>(level);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Value best = c0_[a];
        for (std::size_t j = a + 1; j <= b; ++j) best = pol_.vmax(best, c0_[j]);
        if (level > 0) {
            std::vector<std::pair<std::size_t, std::size_t>> runs;
            enumerate(a, b, level, runs, best);
        }
        memo_.emplace(key, best);
        return best;
    }

  private:
    // Families are lists of disjoint increasing runs of support positions;
    // every nonempty prefix of the enumeration is itself a family and is
    // scored in place. Run count is pruned by the admissibility cap of the
    // first run's start.
    void enumerate(std::size_t lo, std::size_t b, int level,
                   std::vector<std::pair<std::size_t, std::size_t>>& runs, Value& best) {
        std::size_t first = runs.empty() ? 0 : runs.front().first;
        if (!runs.empty()) {
            auto n = static_cast<std::int64_t>(runs.size());
            if (n <= caps_[first] && n >= P::nmin_brute) {
                Value sum = eval(runs[0].first, runs[0].second, level - 1);
                for (std::size_t t = 1; t < runs.size(); ++t)
                    sum = pol_.add(sum, eval(runs[t].first, runs[t].second, level - 1));
                best = pol_.vmax(best, pol_.combine(n, sum));
            }
            if (n >= caps_[first]) return;  // no admissible extension exists
        }
        for (std::size_t i = lo; i <= b; ++i) {
            for (std::size_t j = i; j <= b; ++j) {
                runs.emplace_back(i, j);
                enumerate(j + 1, b, level, runs, best);
                runs.pop_back();
            }
        }
    }

    const NormParams& params_;
    const std::vector<std::int64_t>& idx_;
    const std::vector<Value>& c0_;
    const P& pol_;
    std::vector<int> caps_;
    std::map<std::uint64_t, Value> memo_;
};

struct Prepared {
    std::vector<std::int64_t> idx;
    std::vector<PthRootCoord> coords;
};

Prepared prepare(const NormParams& params, const FinVec& x) {
    Prepared p;
    p.idx.reserve(x.support_size());
    p.coords.reserve(x.support_size());
    for (const auto& [i, c] : x.coords()) {
        p.idx.push_back(i);
        PthRootCoord cc = c;
        if (c.q() != params.q) {
            if (!(c.base() == Rational(1)))
                throw std::invalid_argument("norm: coordinate q incompatible with params");
            cc = PthRootCoord(c.coeff(), Rational(1), params.q);
        }
        p.coords.push_back(cc);
    }
    return p;
}

NormValue finish_t(const Rational& qth_power, unsigned q) { return NormValue(RootValue(qth_power, q)); }

NormValue finish_u(const CertScalar& s) {
    if (s.is_exact()) return NormValue(s.root_value());
    return NormValue(s.interval());
}

}  // namespace

NormValue norm(const NormParams& params, const FinVec& x, const NormOptions& opts) {
    params.validate();
    if (x.empty()) return NormValue(RootValue(Rational(0), 1));
    if (x.support_size() > static_cast<std::size_t>(opts.support_cap))
        throw std::invalid_argument("norm: support cap exceeded");
    Prepared p = prepare(params, x);
    if (params.family == Family::T) {
        TPolicy pol{params.base_weight()};
        std::vector<Rational> c0;
        c0.reserve(p.coords.size());
        for (const auto& c : p.coords) c0.push_back(pol.level0(c));
        return finish_t(dp_fixpoint(params, p.idx, c0, pol), params.q);
    }
    UPolicy pol{params.theta, params.q, opts.precision_bits};
    std::vector<CertScalar> c0;
    c0.reserve(p.coords.size());
    for (const auto& c : p.coords) c0.push_back(pol.level0(c));
    return finish_u(dp_fixpoint(params, p.idx, c0, pol));
}

NormValue profile_norm(const NormParams& params, const std::map<std::int64_t, CertScalar>& profile,
                       const NormOptions& opts) {
    params.validate();
    std::vector<std::int64_t> idx;
    std::vector<CertScalar> vals;
    for (const auto& [i, v] : profile) {
        if (v.is_zero()) continue;
        idx.push_back(i);
        vals.push_back(v);
    }
    if (idx.empty()) return NormValue(RootValue(Rational(0), 1));
    if (idx.size() > static_cast<std::size_t>(opts.support_cap))
        throw std::invalid_argument("profile_norm: support cap exceeded");
    if (params.family == Family::U) {
        UPolicy pol{params.theta, params.q, opts.precision_bits};
        return finish_u(dp_fixpoint(params, idx, vals, pol));
    }
    // T family: measure the q-th power profile with the base recursion, then
    // take the q-th root.
    std::vector<CertScalar> cells;
    cells.reserve(vals.size());
    for (const auto& v : vals) cells.push_back(v.pow_ui(params.q, opts.precision_bits));
    TScalarPolicy pol{params.base_weight(), opts.precision_bits};
    CertScalar base = dp_fixpoint(params, idx, cells, pol);
    return finish_u(base.root(params.q, opts.precision_bits));
}

NormValue norm_bruteforce(const NormParams& params, const FinVec& x, const NormOptions& opts) {
    params.validate();
    if (x.empty()) return NormValue(RootValue(Rational(0), 1));
    if (x.support_size() > 8)
        throw std::invalid_argument("norm_bruteforce: |supp| <= 8 required");
    Prepared p = prepare(params, x);
    int levels = static_cast<int>(x.support_size()) + 1;
    if (params.family == Family::T) {
        TPolicy pol{params.base_weight()};
        std::vector<Rational> c0;
        for (const auto& c : p.coords) c0.push_back(pol.level0(c));
        BruteForce<TPolicy> bf(params, p.idx, c0, pol);
        return finish_t(bf.eval(0, c0.size() - 1, levels), params.q);
    }
    UPolicy pol{params.theta, params.q, opts.precision_bits};
    std::vector<CertScalar> c0;
    for (const auto& c : p.coords) c0.push_back(pol.level0(c));
    BruteForce<UPolicy> bf(params, p.idx, c0, pol);
    return finish_u(bf.eval(0, c0.size() - 1, levels));
}

}  // namespace aslab
