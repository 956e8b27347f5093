#pragma once

#include <optional>
#include <string>

#include "aslab/interval.hpp"
#include "aslab/rational.hpp"

namespace aslab {

// Exact value radicand^(1/root) with radicand >= 0, root >= 1.
// root == 1 means the value IS the radicand. Comparisons raise both sides to
// lcm(root_a, root_b) and compare rational powers, so they are always exact.
class RootValue {
  public:
    RootValue() : radicand_(0), root_(1) {}
    RootValue(Rational radicand, unsigned root);

    static RootValue exact(const Rational& r) { return RootValue(r, 1); }

    const Rational& radicand() const { return radicand_; }
    unsigned root() const { return root_; }
    bool is_zero() const { return radicand_.is_zero(); }

    // The q-th power of the value as an exact rational, when root | q.
    std::optional<Rational> power(unsigned q) const;

    // Exact rational form if the radicand is a perfect root-th power.
    std::optional<Rational> as_rational() const;

    RootValue scale(const Rational& c) const;  // c >= 0
    std::string str() const;

  private:
    Rational radicand_;
    unsigned root_;
};

Ordering exact_compare(const RootValue& a, const RootValue& b);
Ordering exact_compare(const RootValue& a, const Rational& b);

// Value coeff * base^((q-1)/q) = coeff * base^(1/p), p conjugate to q.
// |value|^q = |coeff|^q * base^(q-1) is rational, so absolute values of these
// scalars are always exactly comparable. Closed under products and under
// same-base addition, which is what the norming-set and game coefficients need.
class PthRootCoord {
  public:
    PthRootCoord() : coeff_(0), base_(1), q_(1) {}
    PthRootCoord(Rational coeff, Rational base, unsigned q);

    static PthRootCoord rational(const Rational& c, unsigned q) { return PthRootCoord(c, Rational(1), q); }

    const Rational& coeff() const { return coeff_; }
    const Rational& base() const { return base_; }
    unsigned q() const { return q_; }
    bool is_zero() const { return coeff_.is_zero(); }
    int sign() const { return coeff_.sign(); }

    Rational abs_qth_power() const;  // |coeff|^q * base^(q-1)
    PthRootCoord abs() const { return PthRootCoord(coeff_.abs(), base_, q_); }
    PthRootCoord negate() const { return PthRootCoord(-coeff_, base_, q_); }
    PthRootCoord scale(const Rational& c) const { return PthRootCoord(coeff_ * c, base_, q_); }

    // (c1 b1^(1/p)) * (c2 b2^(1/p)) = (c1 c2) (b1 b2)^(1/p); bases multiply.
    friend PthRootCoord operator*(const PthRootCoord& a, const PthRootCoord& b);

    // Defined when bases match (or either side is zero); nullopt otherwise.
    std::optional<PthRootCoord> add_same_base(const PthRootCoord& o) const;

    // Exact rational form when base^(q-1) is a perfect q-th power.
    std::optional<Rational> as_rational() const;

    // |value| as an exact RootValue: (|coeff|^q base^(q-1))^(1/q).
    RootValue abs_root_value() const;

    std::string str() const;

  private:
    Rational coeff_;
    Rational base_;  // >= 0
    unsigned q_;
};

// Certified enclosures; width <= 2^(1-precision) * max(1, |value|).
CertInterval enclose(const RootValue& v, int precision);
CertInterval enclose(const PthRootCoord& v, int precision);

// floor/ceil of r^(1/q) over Q: exact rational q-th root if one exists.
std::optional<Rational> exact_qth_root(const Rational& r, unsigned q);

}  // namespace aslab
