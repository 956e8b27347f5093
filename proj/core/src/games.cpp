#include "aslab/games.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aslab {

namespace {

std::int64_t rational_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("rational_floor: out of range");
    return q.get_si();
}

NormValue exact_one() { return NormValue(RootValue(Rational(1), 1)); }

CertScalar norm_scalar(const NormValue& v) {
    return v.is_exact() ? CertScalar(v.exact()) : CertScalar(v.enclosure());
}

}  // namespace

void GameSpec::validate() const {
    space.validate();
    if (threshold.sign() <= 0) throw std::invalid_argument("GameSpec: threshold must be positive");
    if (rounds < 1) throw std::invalid_argument("GameSpec: rounds/order must be >= 1");
    if (kind == GameKind::A && rounds > 16)
        throw std::invalid_argument("GameSpec: A-game rounds capped at 16");
}

std::int64_t GameTranscript::live_constraint() const {
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (const auto* tc = std::get_if<TailConstraint>(&it->payload)) return tc->min_index;
    }
    return 1;
}

namespace {

// Certified ball membership of a Player II move.
std::string check_ball(const GameSpec& spec, const VecMove& mv, const NormOptions& opts) {
    if (mv.x.empty()) return {};
    if (spec.side == SpaceSide::Primal) {
        NormValue nv = norm(spec.space, mv.x, opts);
        switch (compare_norms(nv, exact_one())) {
            case CertOrder::Less:
            case CertOrder::Equal:
                return {};
            case CertOrder::Greater:
                return "vector norm exceeds 1 (certified)";
            case CertOrder::Undecided:
                return "ball membership undecided at precision";
        }
        return {};
    }
    switch (mv.cert) {
        case BallCertificate::ScaledBasis: {
            if (mv.x.support_size() != 1) return "scaled-basis certificate on multi-point support";
            const PthRootCoord& c = mv.x.coords().begin()->second;
            if (c.abs_qth_power() > Rational(1)) return "scaled basis functional exceeds 1";
            return {};
        }
        case BallCertificate::NormingSet:
            return {};  // structurally in the dual ball by construction
        case BallCertificate::None:
            return "dual move lacks a ball certificate";
    }
    return {};
}

std::string check_vector_move(const GameSpec& spec, const GameTranscript& t, const VecMove& mv,
                              const NormOptions& opts) {
    if (!mv.x.empty() && mv.x.min_support() < t.live_constraint())
        return "support violates the live tail constraint";
    if (mv.x.q() != spec.space.q && mv.x.kind() != CoordKind::Rational)
        return "coordinate q incompatible with the game space";
    return check_ball(spec, mv, opts);
}

// Weighted sum of the played vectors; Phi applies S_F(m_i)^(1/p).
std::optional<FinVec> combined_vector(const GameTranscript& t) {
    const GameSpec& spec = t.spec;
    unsigned q = spec.space.q;
    try {
        FinVec sum(q, spec.side == SpaceSide::Dual);
        if (spec.kind == GameKind::Phi) {
            SchreierSet F(t.schreier, spec.rounds);
            WeightMap w = weights(F);
            for (std::size_t i = 0; i < t.vectors.size(); ++i) {
                PthRootCoord coef(Rational(1), w.at(t.schreier[i]), q);
                sum = sum + t.vectors[i].scale(coef);
            }
        } else {
            for (const auto& x : t.vectors) sum = sum + x;
        }
        return sum;
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // colliding radical bases: payoff stays uncertified
    }
}

Payoff primal_exact_payoff(const NormParams& params, const FinVec& v, const NormOptions& opts) {
    NormValue nv = norm(params, v, opts);
    Payoff p;
    p.lower = nv;
    p.upper = nv;
    p.exact = nv.is_exact();
    return p;
}

// Dual-side Phi lower bound: pair the weighted functional with the
// S^(1/q)-patterned diagonal vector when all moves are scaled basis
// functionals, and with the generic structured candidates otherwise.
Payoff dual_phi_payoff(const GameTranscript& t, const FinVec& functional, const NormOptions& opts) {
    const GameSpec& spec = t.spec;
    NormValue best = dual_lower_bound(spec.space, functional, opts);
    bool all_basis = true;
    for (const auto& x : t.vectors) {
        if (x.support_size() != 1) all_basis = false;
    }
    if (all_basis && spec.kind == GameKind::Phi && !t.vectors.empty()) {
        SchreierSet F(t.schreier, spec.rounds);
        WeightMap w = weights(F);
        FinVec diag(spec.space.q);
        for (std::size_t i = 0; i < t.vectors.size(); ++i) {
            std::int64_t r = t.vectors[i].min_support();
            int sgn = t.vectors[i].coords().begin()->second.sign();
            Rational wi = w.at(t.schreier[i]);
            // w^{1/q} = w * (1/w)^{1/p}, sign-matched to the functional
            diag.set(r, PthRootCoord(Rational(sgn) * wi, Rational(1) / wi, spec.space.q));
        }
        NormValue nx = norm(spec.space, diag, opts);
        PairValue pv = pair(functional, diag, opts.precision_bits);
        if (nx.is_exact() && pair_is_exact(pv)) {
            RootValue num = std::holds_alternative<Rational>(pv)
                                ? RootValue(std::get<Rational>(pv).abs(), 1)
                                : std::get<PthRootCoord>(pv).abs_root_value();
            if (!nx.exact().is_zero()) {
                RootValue ratio = root_div(num, nx.exact());
                if (!best.is_exact() ||
                    exact_compare(ratio, best.exact()) == Ordering::Greater)
                    best = NormValue(ratio);
            }
        }
    }
    Payoff p;
    p.lower = best;
    p.upper = std::nullopt;
    p.exact = false;
    return p;
}

Payoff a_game_payoff(const GameTranscript& t, const NormOptions& opts) {
    const GameSpec& spec = t.spec;
    unsigned q = spec.space.q;
    auto n = t.vectors.size();
    Payoff p;
    p.lower = NormValue(RootValue(Rational(0), 1));
    if (n == 0) {
        p.upper = p.lower;
        p.exact = true;
        return p;
    }
    if (q == 1) {
        // B_{l_inf^n} is a polytope: the convex max is attained at sign vectors.
        try {
            NormValue best(RootValue(Rational(0), 1));
            std::uint64_t combos = 1ULL << (n - 1);
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                FinVec s = t.vectors[0];
                for (std::size_t i = 1; i < n; ++i) {
                    FinVec xi = (mask >> (i - 1)) & 1 ? t.vectors[i].scale(Rational(-1)) : t.vectors[i];
                    s = s + xi;
                }
                NormValue nv = norm(spec.space, s, opts);
                if (compare_norms(nv, best) == CertOrder::Greater) best = nv;
            }
            p.lower = best;
            p.upper = best;
            p.exact = best.is_exact();
            return p;
        } catch (const std::invalid_argument&) {
            // fall through to the bound route
        }
    }
    // lower: equal coefficients a_i = n^{-1/p} (exactly on the l_p sphere)
    try {
        FinVec s(q, t.vectors[0].dual());
        PthRootCoord coef(Rational(1), Rational(1, static_cast<long>(n)), q);
        for (const auto& x : t.vectors) s = s + x.scale(coef);
        p.lower = norm(spec.space, s, opts);
    } catch (const std::invalid_argument&) {
        p.lower = NormValue(RootValue(Rational(0), 1));
    }
    for (const auto& x : t.vectors) {
        NormValue nv = norm(spec.space, x, opts);
        if (compare_norms(nv, p.lower) == CertOrder::Greater) p.lower = nv;
    }
    // upper: Hoelder, sup_{||a||_p <= 1} ||sum a_i x_i|| <= (sum ||x_i||^q)^(1/q)
    CertScalar acc = CertScalar::exact(Rational(0));
    for (const auto& x : t.vectors) {
        CertScalar nv = norm_scalar(norm(spec.space, x, opts));
        acc = CertScalar::add(acc, nv.pow_ui(q, opts.precision_bits), opts.precision_bits);
    }
    CertScalar up = acc.root(q, opts.precision_bits);
    p.upper = up.is_exact() ? NormValue(up.root_value()) : NormValue(up.interval());
    p.exact = false;
    return p;
}

void score_game(GameTranscript& t, const NormOptions& opts) {
    const GameSpec& spec = t.spec;
    if (spec.side == SpaceSide::Primal) {
        if (spec.kind == GameKind::A) {
            t.payoff = a_game_payoff(t, opts);
        } else {
            auto v = combined_vector(t);
            if (!v) {
                t.payoff = Payoff{NormValue(RootValue(Rational(0), 1)), std::nullopt, false};
                t.winner = Winner::Uncertified;
                return;
            }
            t.payoff = primal_exact_payoff(spec.space, *v, opts);
        }
    } else {
        auto v = combined_vector(t);
        if (!v) {
            t.payoff = Payoff{NormValue(RootValue(Rational(0), 1)), std::nullopt, false};
            t.winner = Winner::Uncertified;
            return;
        }
        if (spec.kind == GameKind::A) {
            t.payoff = Payoff{NormValue(RootValue(Rational(0), 1)), std::nullopt, false};
        } else if (spec.kind == GameKind::Phi) {
            t.payoff = dual_phi_payoff(t, *v, opts);
        } else {
            Payoff p;
            p.lower = dual_lower_bound(spec.space, *v, opts);
            p.upper = std::nullopt;
            t.payoff = p;
        }
    }

    // threshold: c n^{1/p} for N, plain threshold for A/Phi
    RootValue thr(spec.threshold, 1);
    if (spec.kind == GameKind::N) {
        unsigned q = spec.space.q;
        Rational n(static_cast<long>(t.vectors.size()));
        thr = RootValue(spec.threshold.pow(static_cast<long>(q)) * n.pow(static_cast<long>(q) - 1), q);
    }
    NormValue thr_nv{thr};
    if (t.payoff.upper) {
        CertOrder up = compare_norms(*t.payoff.upper, thr_nv);
        if (up == CertOrder::Less || up == CertOrder::Equal) {
            t.winner = Winner::PlayerI;
            return;
        }
    }
    if (compare_norms(t.payoff.lower, thr_nv) == CertOrder::Greater) {
        t.winner = Winner::PlayerII;
        return;
    }
    t.winner = Winner::Uncertified;
}

}  // namespace

GameTranscript play(const GameSpec& spec, const StrategyI& player_one, const StrategyII& player_two,
                    std::uint64_t seed, const NormOptions& opts) {
    spec.validate();
    GameTranscript t;
    t.spec = spec;
    t.seed = seed;
    auto forfeit = [&](PlayerId who, const std::string& reason) -> GameTranscript& {
        t.forfeit_by = who;
        t.forfeit_reason = reason;
        t.winner = who == PlayerId::II ? Winner::PlayerI : Winner::PlayerII;
        return t;
    };

    int round = 0;
    constexpr int kRoundGuard = 100000;
    while (true) {
        if (++round > kRoundGuard) throw std::runtime_error("play: round guard exceeded");
        if (spec.kind == GameKind::Phi) {
            if (!player_two.choose_m) return forfeit(PlayerId::II, "no integer-move strategy");
            std::int64_t m = player_two.choose_m(t);
            if (m < 1 || (!t.schreier.empty() && m <= t.schreier.back()))
                return forfeit(PlayerId::II, "integer move not ascending");
            std::vector<std::int64_t> ext = t.schreier;
            ext.push_back(m);
            if (!is_member(SchreierSet(ext, spec.rounds)))
                return forfeit(PlayerId::II, "integer moves leave S_l");
            t.schreier = std::move(ext);
            VecMove mm;
            mm.m = m;
            t.moves.push_back(Move{PlayerId::II, mm});
        }
        TailConstraint tail = player_one.choose_tail ? player_one.choose_tail(t) : TailConstraint{1};
        if (tail.min_index < 1) return forfeit(PlayerId::I, "tail constraint below 1");
        t.moves.push_back(Move{PlayerId::I, tail});

        if (!player_two.choose_x) return forfeit(PlayerId::II, "no vector-move strategy");
        VecMove xm = player_two.choose_x(t);
        std::string err = check_vector_move(spec, t, xm, opts);
        if (!err.empty()) return forfeit(PlayerId::II, err);
        t.moves.push_back(Move{PlayerId::II, xm});
        t.vectors.push_back(xm.x);

        if (spec.kind == GameKind::Phi) {
            if (is_maximal(SchreierSet(t.schreier, spec.rounds))) break;
        } else if (static_cast<int>(t.vectors.size()) == spec.rounds) {
            break;
        }
    }
    score_game(t, opts);
    return t;
}

StrategyI strategy_modelspace_playerI(const NormParams& params, int n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("strategy_modelspace_playerI: n >= 1");
    std::int64_t first = params.m(n);
    return StrategyI{[first](const GameTranscript& t) {
        if (t.vectors.empty()) return TailConstraint{first};
        const FinVec& last = t.vectors.back();
        std::int64_t next = last.empty() ? t.live_constraint() + 1 : last.max_support() + 1;
        return TailConstraint{std::max(first, next)};
    }};
}

StrategyII strategy_73_playerII(const Rational& theta, const Rational& epsilon, int l) {
    if (!(Rational(0) < epsilon && epsilon < Rational(1) - theta))
        throw std::invalid_argument("strategy_73_playerII: need 0 < eps < 1 - theta");
    if (l < 1) throw std::invalid_argument("strategy_73_playerII: l >= 1");

    auto first_m = [theta, epsilon]() {
        // smallest m with theta m > 1/theta and m > (2/eps)(1 - theta - eps/2)
        Rational inv = Rational(1) / theta;
        Rational growth = (Rational(2) / epsilon) * (Rational(1) - theta - epsilon / Rational(2));
        std::int64_t m = 1;
        while (!(theta * Rational(m) > inv && Rational(m) > growth)) ++m;
        return m;
    };

    StrategyII s;
    s.choose_m = [theta, epsilon, l, first_m](const GameTranscript& t) -> std::int64_t {
        int order = 2 * l - 1;
        if (t.schreier.empty()) return first_m();
        std::int64_t r_prev = t.vectors.empty() ? 0 : t.vectors.back().max_support();
        Rational growth = Rational(4) * Rational(r_prev) / epsilon;
        std::int64_t cand = std::max(t.schreier.back(), rational_floor(growth)) + 1;
        for (;; ++cand) {
            std::vector<std::int64_t> ext = t.schreier;
            ext.push_back(cand);
            if (is_member(SchreierSet(ext, order))) return cand;
        }
    };
    s.choose_x = [](const GameTranscript& t) {
        std::int64_t r_prev = 0;
        for (const auto& x : t.vectors) r_prev = std::max(r_prev, x.empty() ? 0 : x.max_support());
        std::int64_t r = std::max(t.live_constraint(), r_prev + 1);
        VecMove mv;
        bool dual = t.spec.side == SpaceSide::Dual;
        mv.x = FinVec::basis(r, t.spec.space.q, dual);
        mv.cert = dual ? BallCertificate::ScaledBasis : BallCertificate::None;
        return mv;
    };
    return s;
}

namespace {

// Block decomposition of a (possibly partial) Phi transcript of order k+l:
// inner blocks close exactly when their integer prefix becomes maximal in S_k.
struct BlockView {
    std::vector<std::vector<std::size_t>> closed;  // indices of rounds per block
    std::vector<std::size_t> open;                 // current block (maybe empty)
};

BlockView split_blocks(const std::vector<std::int64_t>& ms, int k) {
    BlockView bv;
    std::vector<std::size_t> cur;
    std::vector<std::int64_t> vals;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        cur.push_back(i);
        vals.push_back(ms[i]);
        if (is_member(SchreierSet(vals, k)) && is_maximal(SchreierSet(vals, k))) {
            bv.closed.push_back(cur);
            cur.clear();
            vals.clear();
        }
    }
    bv.open = cur;
    return bv;
}

FinVec weighted_block_vector(const GameTranscript& t, const std::vector<std::size_t>& block,
                             const Rational& inv_bound, int k) {
    std::vector<std::int64_t> vals;
    for (std::size_t i : block) vals.push_back(t.schreier[i]);
    SchreierSet F(vals, k);
    WeightMap w = weights(F);
    unsigned q = t.spec.space.q;
    FinVec y(q, t.spec.side == SpaceSide::Dual);
    for (std::size_t i : block) {
        PthRootCoord coef(inv_bound, w.at(t.schreier[i]), q);
        y = y + t.vectors[i].scale(coef);
    }
    return y;
}

}  // namespace

StrategyI compose_strategies(const StrategyI& chi_k, int k, const StrategyI& chi_l, int l,
                             const Rational& inner_bound, const NormOptions&) {
    if (k < 1 || l < 1) throw std::invalid_argument("compose_strategies: orders must be >= 1");
    if (inner_bound.sign() <= 0)
        throw std::invalid_argument("compose_strategies: inner bound must be positive");
    Rational inv_bound = Rational(1) / inner_bound;

    return StrategyI{[chi_k, chi_l, k, l, inv_bound](const GameTranscript& t) {
        // Reconstruct the inner and outer sub-games from the composed
        // transcript (strategies are pure functions of the transcript).
        BlockView bv = split_blocks(t.schreier, k);

        // Inner transcript: the open block's rounds as an order-k game.
        GameTranscript inner;
        inner.spec = t.spec;
        inner.spec.rounds = k;
        for (std::size_t i : bv.open) {
            VecMove mm;
            mm.m = t.schreier[i];
            inner.schreier.push_back(t.schreier[i]);
            inner.moves.push_back(Move{PlayerId::II, mm});
            if (i < t.vectors.size()) {
                inner.moves.push_back(Move{PlayerId::I, TailConstraint{1}});
                VecMove xv;
                xv.x = t.vectors[i];
                inner.moves.push_back(Move{PlayerId::II, xv});
                inner.vectors.push_back(t.vectors[i]);
            }
        }
        TailConstraint inner_tail = chi_k.choose_tail ? chi_k.choose_tail(inner) : TailConstraint{1};

        // Outer transcript: block leaders and rescaled block vectors as an
        // order-l game; the outer tail is fixed at block start.
        GameTranscript outer;
        outer.spec = t.spec;
        outer.spec.rounds = l;
        for (const auto& block : bv.closed) {
            VecMove mm;
            mm.m = t.schreier[block.front()];
            outer.schreier.push_back(*mm.m);
            outer.moves.push_back(Move{PlayerId::II, mm});
            outer.moves.push_back(
                Move{PlayerId::I, chi_l.choose_tail ? chi_l.choose_tail(outer) : TailConstraint{1}});
            VecMove yv;
            yv.x = weighted_block_vector(t, block, inv_bound, k);
            outer.moves.push_back(Move{PlayerId::II, yv});
            outer.vectors.push_back(yv.x);
        }
        if (!bv.open.empty()) {
            VecMove mm;
            mm.m = t.schreier[bv.open.front()];
            outer.schreier.push_back(*mm.m);
            outer.moves.push_back(Move{PlayerId::II, mm});
        }
        TailConstraint outer_tail = chi_l.choose_tail ? chi_l.choose_tail(outer) : TailConstraint{1};

        // Tails are closed under intersection: the intersection is the max.
        return TailConstraint{std::max(inner_tail.min_index, outer_tail.min_index)};
    }};
}

ComposedReplay compose_replay(const GameTranscript& t, int k, int l, const Rational& inner_bound,
                              const NormOptions& opts) {
    if (t.spec.kind != GameKind::Phi || t.spec.side != SpaceSide::Primal)
        throw std::invalid_argument("compose_replay: primal Phi transcripts only");
    if (t.spec.rounds != k + l) throw std::invalid_argument("compose_replay: order mismatch");
    SchreierSet F(t.schreier, k + l);
    std::vector<SchreierSet> blocks = greedy_decompose(F, k);

    ComposedReplay out;
    unsigned q = t.spec.space.q;
    Rational inv_bound = Rational(1) / inner_bound;
    WeightMap total_w = weights(F);

    std::vector<std::int64_t> leaders;
    std::map<std::int64_t, std::size_t> round_of;
    for (std::size_t i = 0; i < t.schreier.size(); ++i) round_of[t.schreier[i]] = i;

    FinVec outer_sum(q);
    out.weights_multiplicative = true;
    std::vector<FinVec> ys;
    for (const auto& block : blocks) {
        leaders.push_back(block.min());
        WeightMap wb = weights(block);
        FinVec inner_sum(q);
        FinVec y(q);
        for (std::int64_t m : block.elements) {
            std::size_t round = round_of.at(m);
            PthRootCoord coef(Rational(1), wb.at(m), q);
            inner_sum = inner_sum + t.vectors[round].scale(coef);
            y = y + t.vectors[round].scale(PthRootCoord(inv_bound, wb.at(m), q));
        }
        out.inner_payoffs.push_back(norm(t.spec.space, inner_sum, opts));
        ys.push_back(y);
    }
    SchreierSet G(leaders, l);
    WeightMap wg = weights(G);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        PthRootCoord coef(Rational(1), wg.at(leaders[i]), q);
        outer_sum = outer_sum + ys[i].scale(coef);
        // S^{k+l}_F(j) = S^l_G(min F_i) * S^k_{F_i}(j), exactly
        WeightMap wb = weights(blocks[i]);
        for (std::int64_t m : blocks[i].elements) {
            if (!(total_w.at(m) == wg.at(leaders[i]) * wb.at(m))) out.weights_multiplicative = false;
        }
    }
    out.outer_payoff = norm(t.spec.space, outer_sum, opts);

    FinVec total(q);
    for (std::size_t i = 0; i < t.schreier.size(); ++i) {
        total = total + t.vectors[i].scale(PthRootCoord(Rational(1), total_w.at(t.schreier[i]), q));
    }
    out.total_payoff = norm(t.spec.space, total, opts);
    return out;
}

StrategyI adapt_n_strategy_to_phi(const StrategyI& n_strategy) {
    return StrategyI{[n_strategy](const GameTranscript& t) {
        GameTranscript view = t;
        view.spec.kind = GameKind::N;
        view.spec.rounds = t.schreier.empty() ? 1 : static_cast<int>(t.schreier.front());
        view.moves.clear();
        for (const auto& mv : t.moves) {
            if (const auto* v = std::get_if<VecMove>(&mv.payload)) {
                if (v->m.has_value() && v->x.empty()) continue;  // strip integer moves
            }
            view.moves.push_back(mv);
        }
        view.schreier.clear();
        return n_strategy.choose_tail(view);
    }};
}

StrategyI adapt_phi_strategy_to_n(const StrategyI& phi_strategy, int n) {
    if (n < 1) throw std::invalid_argument("adapt_phi_strategy_to_n: n >= 1");
    return StrategyI{[phi_strategy, n](const GameTranscript& t) {
        GameTranscript view = t;
        view.spec.kind = GameKind::Phi;
        view.spec.rounds = 1;
        view.moves.clear();
        view.schreier.clear();
        // replay with pinned integers m_1 = n, m_{i+1} = n + i
        std::size_t round = 0;
        for (const auto& mv : t.moves) {
            if (mv.by == PlayerId::I) {
                VecMove mm;
                mm.m = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(round);
                view.schreier.push_back(*mm.m);
                view.moves.push_back(Move{PlayerId::II, mm});
                ++round;
            }
            view.moves.push_back(mv);
        }
        // integer move for the round whose tail is being chosen now
        VecMove mm;
        mm.m = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(round);
        view.schreier.push_back(*mm.m);
        view.moves.push_back(Move{PlayerId::II, mm});
        return phi_strategy.choose_tail(view);
    }};
}

PhiCertificate phi_lower_certificate(const Rational& theta, unsigned q, int l,
                                     const Rational& epsilon, const NormOptions& opts) {
    if (q < 1) throw std::invalid_argument("phi_lower_certificate: q >= 1");
    if (!(Rational(0) < epsilon && epsilon < Rational(1) - theta))
        throw std::invalid_argument("phi_lower_certificate: need 0 < eps < 1 - theta");
    int order = 2 * l - 1;

    StrategyII two = strategy_73_playerII(theta, epsilon, l);

    GameSpec spec;
    spec.kind = GameKind::Phi;
    spec.threshold = Rational(1);
    spec.rounds = order;
    spec.space = NormParams{Family::T, theta, q, {}, Convention::ThetaToQ};
    spec.side = SpaceSide::Dual;

    // The model-space opener realizes "r_1 chosen so large": tail m_{m_1}.
    GameTranscript probe;
    probe.spec = spec;
    std::int64_t m1 = two.choose_m(probe);
    StrategyI one = strategy_modelspace_playerI(spec.space, static_cast<int>(std::min<std::int64_t>(m1, 64)));

    PhiCertificate cert;

    // Generate (M, R) by playing the strategies against each other, with a
    // support cap: higher orders (l >= 2) exceed any desk-scale budget.
    GameTranscript t;
    t.spec = spec;
    int cap = opts.support_cap;
    while (true) {
        std::int64_t m = two.choose_m(t);
        std::vector<std::int64_t> ext = t.schreier;
        ext.push_back(m);
        t.schreier = std::move(ext);
        VecMove mm;
        mm.m = m;
        t.moves.push_back(Move{PlayerId::II, mm});
        t.moves.push_back(Move{PlayerId::I, one.choose_tail(t)});
        VecMove xv = two.choose_x(t);
        t.moves.push_back(Move{PlayerId::II, xv});
        t.vectors.push_back(xv.x);
        if (is_maximal(SchreierSet(t.schreier, order))) break;
        if (static_cast<int>(t.vectors.size()) >= cap) {
            cert.certified = false;
            cert.diagnostic = "support cap " + std::to_string(cap) +
                              " reached before the Schreier set closed (order " +
                              std::to_string(order) + ")";
            return cert;
        }
    }

    cert.M = t.schreier;
    for (const auto& x : t.vectors) cert.R.push_back(x.min_support());
    cert.F = SchreierSet(cert.M, order);
    WeightMap w = weights(cert.F);

    FinVec v(1);
    for (std::size_t i = 0; i < cert.M.size(); ++i) v.set(cert.R[i], w.at(cert.M[i]));

    NormParams direct{Family::T, theta, 1, {}, Convention::ThetaDirect};
    NormParams to_q{Family::T, theta.pow(static_cast<long>(q)), 1, {}, Convention::ThetaDirect};
    NormOptions wide = opts;
    wide.support_cap = std::max(opts.support_cap, static_cast<int>(cert.M.size()) + 1);
    cert.P_theta_direct = *norm(direct, v, wide).exact().as_rational();
    cert.P_theta_to_q = *norm(to_q, v, wide).exact().as_rational();

    Rational bound_hyp = (theta + epsilon).pow(l);
    if (cert.P_theta_direct > bound_hyp)
        throw std::logic_error("phi_lower_certificate: P exceeds (theta+eps)^l on strategy data");

    cert.bound = RootValue(Rational(1) / cert.P_theta_direct, q);
    cert.bound_to_q = RootValue(Rational(1) / cert.P_theta_to_q, q);
    cert.floor_bound = RootValue(Rational(1) / bound_hyp, q);
    if (exact_compare(cert.bound, cert.floor_bound) == Ordering::Less)
        throw std::logic_error("phi_lower_certificate: bound fell below the paper floor");
    cert.certified = true;
    return cert;
}

NonuniversalityWitness nonuniversality_arithmetic(const Rational& a, unsigned q, const Rational& C) {
    if (a < Rational(1)) throw std::invalid_argument("nonuniversality_arithmetic: a >= 1");
    if (q < 1) throw std::invalid_argument("nonuniversality_arithmetic: q >= 1");
    Rational a2q = a.pow(2 * static_cast<long>(q));
    Rational theta = Rational(1) / (a2q * Rational(2));
    // theta^{-1/q} > a^2 iff theta^{-1} > a^{2q}
    if (!(Rational(1) / theta > a2q)) throw std::logic_error("nonuniversality_arithmetic: certificate failed");
    Rational cq = C.pow(static_cast<long>(q));
    for (long l = 1; l <= 1000000; ++l) {
        Rational lhs = (Rational(1) / theta).pow(l);
        Rational rhs = cq * a2q.pow(l);
        if (lhs > rhs) return NonuniversalityWitness{theta, l};
    }
    throw std::logic_error("nonuniversality_arithmetic: witness search exhausted");
}

}  // namespace aslab
