#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aslab/norms.hpp"
#include "aslab/schreier.hpp"

namespace aslab {

enum class GameKind { N, A, Phi };
enum class SpaceSide { Primal, Dual };
enum class PlayerId { I, II };
enum class Winner { PlayerI, PlayerII, Uncertified };

struct GameSpec {
    GameKind kind = GameKind::N;
    Rational threshold = Rational(1);  // c (N/A) or C (Phi)
    int rounds = 1;                    // n for N/A; Schreier order l for Phi
    NormParams space;
    SpaceSide side = SpaceSide::Primal;

    void validate() const;
};

struct TailConstraint {
    std::int64_t min_index = 1;
};

// How a Player II move certifies membership in the unit ball. Primal moves
// are checked by exact norm evaluation; dual moves need a structural
// certificate (no exact dual norm exists).
enum class BallCertificate { None, ScaledBasis, NormingSet };

struct VecMove {
    std::optional<std::int64_t> m;  // Phi integer move, when this is an m-turn
    FinVec x;
    BallCertificate cert = BallCertificate::None;
};

struct Move {
    PlayerId by;
    std::variant<TailConstraint, VecMove> payload;
};

struct Payoff {
    NormValue lower;
    std::optional<NormValue> upper;  // absent = Unknown (dual side)
    bool exact = false;
};

struct GameTranscript {
    GameSpec spec;
    std::uint64_t seed = 0;
    std::vector<Move> moves;
    std::vector<std::int64_t> schreier;  // Phi integers chosen so far
    std::vector<FinVec> vectors;         // Player II vectors in order
    Payoff payoff;
    Winner winner = Winner::Uncertified;
    std::optional<PlayerId> forfeit_by;
    std::string forfeit_reason;

    std::int64_t live_constraint() const;  // most recent tail, 1 if none
};

struct StrategyI {
    std::function<TailConstraint(const GameTranscript&)> choose_tail;
};
struct StrategyII {
    std::function<std::int64_t(const GameTranscript&)> choose_m;  // Phi only
    std::function<VecMove(const GameTranscript&)> choose_x;
};

// Runs a full game. Illegal moves forfeit for the offending player. Payoffs
// are exact on the primal side (enclosures for U with q >= 2) and certified
// from below only on the dual side; the winner is assigned only when the
// threshold comparison certifies.
GameTranscript play(const GameSpec& spec, const StrategyI& player_one, const StrategyII& player_two,
                    std::uint64_t seed, const NormOptions& opts = {});

// Player I strategy from the model-space argument: open with tail m_n, then
// stay past the previous vector's support.
StrategyI strategy_modelspace_playerI(const NormParams& params, int n);

// Player II strategy realizing the dual lower estimate: grows (m_i, r_i)
// meeting theta m_1 > 1/theta, m_1 > (2/eps)(1 - theta - eps/2) and
// m_{j+1} > 4 r_j / eps, and plays basis functionals e*_{r_i} (dual side)
// or basis vectors e_{r_i} (primal surrogate).
StrategyII strategy_73_playerII(const Rational& theta, const Rational& epsilon, int l);

// Composition of Player I strategies: chi_k for the order-k game and chi_l
// for the order-l game produce a strategy for the order-(k+l) game that runs
// chi_k on inner S_k blocks and chi_l on the block leaders; emitted
// constraints are intersections of tails (i.e. the max).
StrategyI compose_strategies(const StrategyI& chi_k, int k, const StrategyI& chi_l, int l,
                             const Rational& inner_bound, const NormOptions& opts = {});

// Post-hoc replay of a completed order-(k+l) Phi transcript under the block
// decomposition: inner payoffs, the rescaled outer payoff, the exact weight
// multiplicativity S^{k+l}_F = S^l_G(min F_i) * S^k_{F_i}, and the product
// bound certification.
struct ComposedReplay {
    std::vector<NormValue> inner_payoffs;
    NormValue outer_payoff;
    NormValue total_payoff;
    bool weights_multiplicative = false;
};
ComposedReplay compose_replay(const GameTranscript& t, int k, int l, const Rational& inner_bound,
                              const NormOptions& opts = {});

// Adapters for the order-1 reduction: an N-game Player I strategy plays the
// Phi(1,p,c) game ignoring the integers, and a Phi strategy plays the
// N(c,p,n) game with the integer choices pinned to m_1 = n, m_{i+1} = n + i.
StrategyI adapt_n_strategy_to_phi(const StrategyI& n_strategy);
StrategyI adapt_phi_strategy_to_n(const StrategyI& phi_strategy, int n);

// Certified lower bound for the dual Phi payoff, from strategy-generated
// data: P is the exact base norm of sum S_F(m_i) e_{r_i} and the bound is
// P^{-1/q}; the paper floor (theta+eps)^{-l/q} is reported alongside.
struct PhiCertificate {
    bool certified = false;           // false when the support cap stopped generation
    std::string diagnostic;
    std::vector<std::int64_t> M, R;
    SchreierSet F;
    Rational P_theta_direct = Rational(0);  // base weight theta
    Rational P_theta_to_q = Rational(0);    // base weight theta^q
    RootValue bound;                        // (1/P_direct)^(1/q)
    RootValue bound_to_q;                   // (1/P_to_q)^(1/q)
    RootValue floor_bound;                  // ((theta+eps)^-l)^(1/q)
};
PhiCertificate phi_lower_certificate(const Rational& theta, unsigned q, int l,
                                     const Rational& epsilon, const NormOptions& opts = {});

// theta with theta^(-1/q) > a^2 (exact), and the least l such that
// (theta^(-1/q))^l > C a^(2l).
struct NonuniversalityWitness {
    Rational theta;
    long l_witness;
};
NonuniversalityWitness nonuniversality_arithmetic(const Rational& a, unsigned q, const Rational& C);

}  // namespace aslab
