#include "aslab/cert_scalar.hpp"

#include <numeric>
#include <stdexcept>

namespace aslab {

namespace {
constexpr unsigned kMaxCommonRoot = 64;  // guard against pathological lcm blowup
}

RootValue root_mul(const RootValue& a, const RootValue& b) {
    unsigned l = std::lcm(a.root(), b.root());
    Rational ra = a.radicand().pow(static_cast<long>(l / a.root()));
    Rational rb = b.radicand().pow(static_cast<long>(l / b.root()));
    return RootValue(ra * rb, l);
}

RootValue root_div(const RootValue& a, const RootValue& b) {
    if (b.is_zero()) throw std::invalid_argument("root_div: division by zero");
    unsigned l = std::lcm(a.root(), b.root());
    Rational ra = a.radicand().pow(static_cast<long>(l / a.root()));
    Rational rb = b.radicand().pow(static_cast<long>(l / b.root()));
    return RootValue(ra / rb, l);
}

std::optional<RootValue> root_add(const RootValue& a, const RootValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    unsigned l = std::lcm(a.root(), b.root());
    if (l > kMaxCommonRoot) return std::nullopt;
    Rational ra = a.radicand().pow(static_cast<long>(l / a.root()));
    Rational rb = b.radicand().pow(static_cast<long>(l / b.root()));
    // ra^(1/l) + rb^(1/l) collapses iff rb/ra is a perfect l-th power t^l:
    // the sum is then ra^(1/l) (1 + t).
    if (auto t = exact_qth_root(rb / ra, l)) {
        Rational factor = (Rational(1) + *t).pow(static_cast<long>(l));
        return RootValue(ra * factor, l);
    }
    return std::nullopt;
}

bool CertScalar::is_zero() const {
    if (is_exact()) return root_value().is_zero();
    return interval().lo().is_zero() && interval().hi().is_zero();
}

CertInterval CertScalar::to_interval(int bits) const {
    if (is_exact()) return enclose(root_value(), bits);
    return interval();
}

CertScalar CertScalar::add(const CertScalar& a, const CertScalar& b, int bits) {
    if (a.is_exact() && b.is_exact()) {
        if (auto s = root_add(a.root_value(), b.root_value())) return CertScalar(*s);
    }
    return CertScalar(a.to_interval(bits) + b.to_interval(bits));
}

CertScalar CertScalar::mul(const CertScalar& a, const CertScalar& b, int bits) {
    if (a.is_exact() && b.is_exact()) return CertScalar(root_mul(a.root_value(), b.root_value()));
    return CertScalar(a.to_interval(bits) * b.to_interval(bits));
}

CertScalar CertScalar::max(const CertScalar& a, const CertScalar& b, int bits) {
    if (a.is_exact() && b.is_exact()) {
        return exact_compare(a.root_value(), b.root_value()) == Ordering::Less ? b : a;
    }
    if (a.is_exact()) {
        // decide against the enclosure endpoints; hull only when undecided
        const CertInterval& ib = b.interval();
        Ordering vs_hi = exact_compare(a.root_value(), ib.hi().to_rational());
        if (vs_hi == Ordering::Greater || vs_hi == Ordering::Equal) return a;
        Ordering vs_lo = exact_compare(a.root_value(), ib.lo().to_rational());
        if (vs_lo == Ordering::Less || vs_lo == Ordering::Equal) return b;
        return CertScalar(CertInterval::hull(a.to_interval(bits), ib));
    }
    if (b.is_exact()) return max(b, a, bits);
    return CertScalar(CertInterval::max(a.interval(), b.interval()));
}

CertScalar CertScalar::min(const CertScalar& a, const CertScalar& b, int bits) {
    if (a.is_exact() && b.is_exact()) {
        return exact_compare(a.root_value(), b.root_value()) == Ordering::Greater ? b : a;
    }
    if (a.is_exact()) {
        const CertInterval& ib = b.interval();
        Ordering vs_lo = exact_compare(a.root_value(), ib.lo().to_rational());
        if (vs_lo == Ordering::Less || vs_lo == Ordering::Equal) return a;
        Ordering vs_hi = exact_compare(a.root_value(), ib.hi().to_rational());
        if (vs_hi == Ordering::Greater || vs_hi == Ordering::Equal) return b;
        return CertScalar(CertInterval::hull(a.to_interval(bits), ib));
    }
    if (b.is_exact()) return min(b, a, bits);
    const CertInterval &ia = a.interval(), &ib = b.interval();
    int nb = std::max(ia.bits(), ib.bits());
    return CertScalar(CertInterval(ia.lo() < ib.lo() ? ia.lo() : ib.lo(),
                                   ia.hi() < ib.hi() ? ia.hi() : ib.hi(), nb));
}

CertScalar CertScalar::scale(const Rational& c, int bits) const {
    if (c.sign() < 0) throw std::invalid_argument("CertScalar::scale: negative factor");
    if (is_exact()) return CertScalar(root_value().scale(c));
    return CertScalar(interval().scale(c));
}

CertScalar CertScalar::pow_ui(unsigned e, int bits) const {
    if (e == 0) return CertScalar::exact(Rational(1));
    CertScalar acc = *this;
    for (unsigned i = 1; i < e; ++i) acc = mul(acc, *this, bits);
    return acc;
}

CertScalar CertScalar::root(unsigned k, int bits) const {
    if (k == 0) throw std::invalid_argument("CertScalar::root: k must be >= 1");
    if (k == 1) return *this;
    if (is_exact()) {
        const RootValue& rv = root_value();
        return CertScalar(RootValue(rv.radicand(), rv.root() * k));
    }
    return CertScalar(interval().root(k));
}

Rational CertScalar::lower(int bits) const {
    if (is_exact() && root_value().as_rational()) return *root_value().as_rational();
    return to_interval(bits).lo().to_rational();
}

Rational CertScalar::upper(int bits) const {
    if (is_exact() && root_value().as_rational()) return *root_value().as_rational();
    return to_interval(bits).hi().to_rational();
}

bool CertScalar::same_repr(const CertScalar& a, const CertScalar& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return exact_compare(a.root_value(), b.root_value()) == Ordering::Equal;
    return a.interval().lo() == b.interval().lo() && a.interval().hi() == b.interval().hi();
}

CertOrder compare(const CertScalar& a, const CertScalar& b) {
    if (a.is_exact() && b.is_exact()) {
        switch (exact_compare(a.root_value(), b.root_value())) {
            case Ordering::Less: return CertOrder::Less;
            case Ordering::Equal: return CertOrder::Equal;
            case Ordering::Greater: return CertOrder::Greater;
        }
    }
    int bits = 64;
    if (!a.is_exact()) bits = std::max(bits, a.interval().bits());
    if (!b.is_exact()) bits = std::max(bits, b.interval().bits());
    CertInterval ia = a.to_interval(bits), ib = b.to_interval(bits);
    switch (interval_compare(ia, ib)) {
        case IntervalOrder::Less: return CertOrder::Less;
        case IntervalOrder::Greater: return CertOrder::Greater;
        case IntervalOrder::Undecided: return CertOrder::Undecided;
    }
    return CertOrder::Undecided;
}

}  // namespace aslab
