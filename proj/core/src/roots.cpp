#include "aslab/roots.hpp"

#include <numeric>
#include <stdexcept>

namespace aslab {

RootValue::RootValue(Rational radicand, unsigned root) : radicand_(std::move(radicand)), root_(root) {
    if (root_ < 1) throw std::invalid_argument("RootValue: root must be >= 1");
    if (radicand_.sign() < 0) throw std::invalid_argument("RootValue: negative radicand");
    if (root_ == 1) return;
    // Collapse perfect powers so root=1 really means "is the radicand".
    if (auto r = exact_qth_root(radicand_, root_)) {
        radicand_ = *r;
        root_ = 1;
    }
}

std::optional<Rational> RootValue::power(unsigned q) const {
    if (q % root_ != 0) return std::nullopt;
    return radicand_.pow(static_cast<long>(q / root_));
}

std::optional<Rational> RootValue::as_rational() const {
    if (root_ == 1) return radicand_;
    return std::nullopt;
}

RootValue RootValue::scale(const Rational& c) const {
    if (c.sign() < 0) throw std::invalid_argument("RootValue::scale: negative factor");
    return RootValue(radicand_ * c.pow(static_cast<long>(root_)), root_);
}

std::string RootValue::str() const {
    if (root_ == 1) return radicand_.str();
    return "(" + radicand_.str() + ")^(1/" + std::to_string(root_) + ")";
}

Ordering exact_compare(const RootValue& a, const RootValue& b) {
    unsigned l = std::lcm(a.root(), b.root());
    Rational pa = a.radicand().pow(static_cast<long>(l / a.root()));
    Rational pb = b.radicand().pow(static_cast<long>(l / b.root()));
    return compare(pa, pb);
}

Ordering exact_compare(const RootValue& a, const Rational& b) {
    if (b.sign() < 0) return Ordering::Greater;
    return exact_compare(a, RootValue(b, 1));
}

PthRootCoord::PthRootCoord(Rational coeff, Rational base, unsigned q)
    : coeff_(std::move(coeff)), base_(std::move(base)), q_(q) {
    if (q_ < 1) throw std::invalid_argument("PthRootCoord: q must be >= 1");
    if (base_.sign() < 0) throw std::invalid_argument("PthRootCoord: negative base");
    if (coeff_.is_zero() || q_ == 1) base_ = Rational(1);  // base^0 = 1 when p = infinity
    if (base_.is_zero()) {  // value is 0 unless q == 1
        coeff_ = Rational(0);
        base_ = Rational(1);
    }
}

Rational PthRootCoord::abs_qth_power() const {
    return coeff_.abs().pow(static_cast<long>(q_)) * base_.pow(static_cast<long>(q_) - 1);
}

PthRootCoord operator*(const PthRootCoord& a, const PthRootCoord& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("PthRootCoord: mixed q");
    return PthRootCoord(a.coeff_ * b.coeff_, a.base_ * b.base_, a.q_);
}

std::optional<PthRootCoord> PthRootCoord::add_same_base(const PthRootCoord& o) const {
    if (q_ != o.q_) return std::nullopt;
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (base_ == o.base_) return PthRootCoord(coeff_ + o.coeff_, base_, q_);
    // Bases that differ by a perfect q-th power factor still collapse:
    // b2 = b1 * t^q  =>  b2^(1/p) = b1^(1/p) * t^(q-1).
    if (!base_.is_zero() && !o.base_.is_zero()) {
        if (auto t = exact_qth_root(o.base_ / base_, q_)) {
            Rational adj = o.coeff_ * t->pow(static_cast<long>(q_) - 1);
            return PthRootCoord(coeff_ + adj, base_, q_);
        }
    }
    return std::nullopt;
}

std::optional<Rational> PthRootCoord::as_rational() const {
    if (q_ == 1 || base_ == Rational(1)) return coeff_;
    // coeff * base^((q-1)/q) rational iff base^(q-1) is a perfect q-th power.
    if (auto r = exact_qth_root(base_.pow(static_cast<long>(q_) - 1), q_)) return coeff_ * *r;
    return std::nullopt;
}

RootValue PthRootCoord::abs_root_value() const { return RootValue(abs_qth_power(), q_); }

std::string PthRootCoord::str() const {
    if (q_ == 1 || base_ == Rational(1)) return coeff_.str();
    return coeff_.str() + "*(" + base_.str() + ")^(" + std::to_string(q_ - 1) + "/" + std::to_string(q_) + ")";
}

CertInterval enclose(const RootValue& v, int precision) {
    if (precision < 1) throw std::invalid_argument("enclose: precision must be >= 1");
    if (v.is_zero()) return CertInterval::exact_zero(precision);
    if (auto r = v.as_rational()) return CertInterval::from_rational(*r, precision);
    return CertInterval(rational_root(v.radicand(), v.root(), precision, Round::Down),
                        rational_root(v.radicand(), v.root(), precision, Round::Up), precision);
}

CertInterval enclose(const PthRootCoord& v, int precision) {
    if (v.is_zero()) return CertInterval::exact_zero(precision);
    CertInterval mag = enclose(v.abs_root_value(), precision);
    if (v.sign() >= 0) return mag;
    return CertInterval(-mag.hi(), -mag.lo(), precision);
}

std::optional<Rational> exact_qth_root(const Rational& r, unsigned q) {
    if (r.sign() < 0) return std::nullopt;
    if (q == 1) return r;
    if (r.is_zero()) return Rational(0);
    mpz_class rn, rd;
    int en = mpz_root(rn.get_mpz_t(), r.num().get_mpz_t(), q);
    if (!en) return std::nullopt;
    int ed = mpz_root(rd.get_mpz_t(), r.den().get_mpz_t(), q);
    if (!ed) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace aslab
