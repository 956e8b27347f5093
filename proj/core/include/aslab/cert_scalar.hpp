#pragma once

#include <variant>

#include "aslab/interval.hpp"
#include "aslab/roots.hpp"

namespace aslab {

enum class CertOrder { Less, Equal, Greater, Undecided };

// Nonnegative scalar that is either an exact q-th-root-of-rational value or a
// certified enclosure. Products of exact values stay exact; sums stay exact
// only when the radicals collapse (same value field), otherwise the result
// degrades to an enclosure. Used for U-family norm cells and block profiles.
class CertScalar {
  public:
    CertScalar() : v_(RootValue(Rational(0), 1)) {}
    explicit CertScalar(RootValue rv) : v_(std::move(rv)) {}
    explicit CertScalar(CertInterval iv) : v_(std::move(iv)) {}
    static CertScalar exact(const Rational& r) { return CertScalar(RootValue(r, 1)); }

    bool is_exact() const { return std::holds_alternative<RootValue>(v_); }
    const RootValue& root_value() const { return std::get<RootValue>(v_); }
    const CertInterval& interval() const { return std::get<CertInterval>(v_); }
    bool is_zero() const;

    CertInterval to_interval(int bits) const;

    static CertScalar add(const CertScalar& a, const CertScalar& b, int bits);
    static CertScalar mul(const CertScalar& a, const CertScalar& b, int bits);
    static CertScalar max(const CertScalar& a, const CertScalar& b, int bits);
    static CertScalar min(const CertScalar& a, const CertScalar& b, int bits);
    CertScalar scale(const Rational& c, int bits) const;  // c >= 0
    CertScalar pow_ui(unsigned e, int bits) const;
    CertScalar root(unsigned k, int bits) const;

    // Certified lower/upper rational bounds of the value.
    Rational lower(int bits) const;
    Rational upper(int bits) const;

    // Representation equality (used for fixpoint detection in level iteration).
    static bool same_repr(const CertScalar& a, const CertScalar& b);

    friend CertOrder compare(const CertScalar& a, const CertScalar& b);

  private:
    std::variant<RootValue, CertInterval> v_;
};

// Exact product/quotient of root values: (r1)^(1/a) op (r2)^(1/b) is the
// lcm(a,b)-th root of the corresponding rational.
RootValue root_mul(const RootValue& a, const RootValue& b);
RootValue root_div(const RootValue& a, const RootValue& b);  // b != 0

// Exact sum when the radicals collapse into one field element.
std::optional<RootValue> root_add(const RootValue& a, const RootValue& b);

}  // namespace aslab
