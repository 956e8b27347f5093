#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aslab/cert_scalar.hpp"
#include "aslab/finvec.hpp"
#include "aslab/interval.hpp"
#include "aslab/rational.hpp"
#include "aslab/roots.hpp"

namespace aslab {

enum class Family { T, U };

// How theta enters the implicit base norm that the q-convexified space is
// built on: ThetaToQ uses weight theta^q (the convexification of T_{theta^q}),
// ThetaDirect uses weight theta (the convexification of T_theta). For q == 1
// the two coincide.
enum class Convention { ThetaToQ, ThetaDirect };

struct NormParams {
    Family family = Family::T;
    Rational theta = Rational(1, 2);
    unsigned q = 1;  // p conjugate; q == 1 encodes p = infinity
    std::vector<std::int64_t> m_prefix;  // empty = plain N
    Convention convention = Convention::ThetaToQ;

    // Admissibility sequence m_n; beyond the stored prefix it continues with
    // identity offset m_{k+j} = m_k + j.
    std::int64_t m(std::int64_t n) const;
    Rational base_weight() const;  // weight of the implicit base-norm recursion
    void validate() const;
};

// The norm of a finitely supported vector: exact q-th-root-of-rational when
// the evaluation stays in the exact scalar field, else a certified enclosure.
class NormValue {
  public:
    NormValue() : v_(RootValue(Rational(0), 1)) {}
    explicit NormValue(RootValue rv) : v_(std::move(rv)) {}
    explicit NormValue(CertInterval iv) : v_(std::move(iv)) {}

    bool is_exact() const { return std::holds_alternative<RootValue>(v_); }
    const RootValue& exact() const { return std::get<RootValue>(v_); }
    const CertInterval& enclosure() const { return std::get<CertInterval>(v_); }
    CertInterval to_interval(int bits) const;
    bool is_zero() const;
    std::string str() const;

  private:
    std::variant<RootValue, CertInterval> v_;
};

// Certified comparison of a*scale_a against b*scale_b (scales nonnegative).
CertOrder compare_norms(const NormValue& a, const NormValue& b,
                        const Rational& scale_a = Rational(1), const Rational& scale_b = Rational(1));

struct NormOptions {
    int support_cap = 40;
    int precision_bits = 64;
};

// A family of pairwise disjoint, increasing integer intervals.
struct IntervalFamily {
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;  // closed [lo, hi]
};

// Exact/certified evaluation of the model norm, by level iteration of the
// implicit recursion to a fixpoint over a support-aligned interval DP.
NormValue norm(const NormParams& params, const FinVec& x, const NormOptions& opts = {});

// Independent oracle: level-bounded exhaustive enumeration of admissible
// norming trees, runs over arbitrary disjoint support runs. |supp| <= 8.
NormValue norm_bruteforce(const NormParams& params, const FinVec& x, const NormOptions& opts = {});

// Norm of sum profile_j e_j for certified nonnegative scalar coordinates
// (1-unconditionality makes the sign irrelevant). This is how block-norm
// profiles get measured by a model-space outer norm.
NormValue profile_norm(const NormParams& params, const std::map<std::int64_t, CertScalar>& profile,
                       const NormOptions& opts = {});

// All families of n disjoint increasing intervals inside [lo, hi] with
// m_n <= min I_1 (and n >= 2 for the U family).
std::vector<IntervalFamily> admissible_families(const NormParams& params, std::int64_t lo,
                                                std::int64_t hi, int n);

// Exact biorthogonal pairing sum f_i x_i; falls back to a certified enclosure
// when radical bases do not collapse.
using PairValue = std::variant<Rational, PthRootCoord, CertInterval>;
PairValue pair(const FinVec& f, const FinVec& x, int precision_bits = 64);

Rational pair_abs_lower(const PairValue& p);   // certified lower bound for |pairing|
CertScalar pair_abs(const PairValue& p, int bits);  // certified enclosure of |pairing|
bool pair_is_exact(const PairValue& p);

// Certified lower bound for the dual norm of f, from a structured primal
// candidate set (basis vectors, sign-matched indicator, Schreier-weighted).
NormValue dual_lower_bound(const NormParams& params, const FinVec& f, const NormOptions& opts = {});

// Pseudorandom structured elements of the norming sets K_level / L_level.
std::vector<FinVec> norming_sample(const NormParams& params, int level, std::int64_t support_bound,
                                   int budget, std::uint64_t seed);

// Falsifier for |f(x)| <= ||x||; a returned vector is a certified violation.
struct BallTestResult {
    std::optional<FinVec> violation;
    bool found() const { return violation.has_value(); }
};
BallTestResult ball_membership_test(const NormParams& params, const FinVec& f, int trials,
                                    std::uint64_t seed, const NormOptions& opts = {});

}  // namespace aslab
