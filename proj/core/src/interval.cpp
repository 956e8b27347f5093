#include "aslab/interval.hpp"

#include <stdexcept>

namespace aslab {

CertInterval::CertInterval(Dyadic lo, Dyadic hi, int bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {
    if (bits_ < 1) throw std::invalid_argument("CertInterval: precision must be >= 1");
    if (hi_ < lo_) throw std::invalid_argument("CertInterval: lo > hi");
}

CertInterval CertInterval::from_rational(const Rational& r, int bits) {
    return CertInterval(Dyadic::from_rational(r, bits, Round::Down),
                        Dyadic::from_rational(r, bits, Round::Up), bits);
}

bool CertInterval::contains(const Rational& r) const {
    return lo_.to_rational() <= r && r <= hi_.to_rational();
}

CertInterval CertInterval::round_out(int bits) const {
    return CertInterval(lo_.round_to(bits, Round::Down), hi_.round_to(bits, Round::Up), bits);
}

CertInterval operator+(const CertInterval& a, const CertInterval& b) {
    int bits = std::max(a.bits_, b.bits_);
    return CertInterval(a.lo_ + b.lo_, a.hi_ + b.hi_, bits).round_out(bits);
}

CertInterval operator-(const CertInterval& a, const CertInterval& b) {
    int bits = std::max(a.bits_, b.bits_);
    return CertInterval(a.lo_ - b.hi_, a.hi_ - b.lo_, bits).round_out(bits);
}

CertInterval operator*(const CertInterval& a, const CertInterval& b) {
    int bits = std::max(a.bits_, b.bits_);
    Dyadic c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
    Dyadic lo = c1, hi = c1;
    for (const Dyadic& c : {c2, c3, c4}) {
        if (c < lo) lo = c;
        if (hi < c) hi = c;
    }
    return CertInterval(lo, hi, bits).round_out(bits);
}

CertInterval CertInterval::scale(const Rational& r) const {
    if (r.is_zero()) return exact_zero(bits_);
    Dyadic n(r.num(), 0);
    Dyadic a = lo_ * n, b = hi_ * n;
    if (r.sign() < 0) std::swap(a, b);
    if (r.den() == 1) return CertInterval(a, b, bits_).round_out(bits_);
    return CertInterval(Dyadic::div(a, r.den(), bits_, Round::Down),
                        Dyadic::div(b, r.den(), bits_, Round::Up), bits_);
}

CertInterval CertInterval::pow_ui(unsigned e) const {
    if (lo_.sign() < 0) throw std::invalid_argument("CertInterval::pow_ui: needs lo >= 0");
    if (e == 0) return point(Dyadic(1), bits_);
    CertInterval acc = *this;
    for (unsigned i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

CertInterval CertInterval::root(unsigned q) const {
    if (lo_.sign() < 0) throw std::invalid_argument("CertInterval::root: needs lo >= 0");
    return CertInterval(lo_.root(q, bits_, Round::Down), hi_.root(q, bits_, Round::Up), bits_);
}

CertInterval CertInterval::max(const CertInterval& a, const CertInterval& b) {
    int bits = std::max(a.bits_, b.bits_);
    return CertInterval(a.lo_ < b.lo_ ? b.lo_ : a.lo_, a.hi_ < b.hi_ ? b.hi_ : a.hi_, bits);
}

CertInterval CertInterval::hull(const CertInterval& a, const CertInterval& b) {
    int bits = std::max(a.bits_, b.bits_);
    return CertInterval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ < b.hi_ ? b.hi_ : a.hi_, bits);
}

std::string CertInterval::str() const {
    return "[" + lo_.str() + ", " + hi_.str() + "]@" + std::to_string(bits_);
}

IntervalOrder interval_compare(const CertInterval& a, const CertInterval& b) {
    if (a.hi() < b.lo()) return IntervalOrder::Less;
    if (b.hi() < a.lo()) return IntervalOrder::Greater;
    return IntervalOrder::Undecided;
}

IntervalOrder interval_compare(const CertInterval& a, const Rational& r) {
    if (a.hi().to_rational() < r) return IntervalOrder::Less;
    if (r < a.lo().to_rational()) return IntervalOrder::Greater;
    return IntervalOrder::Undecided;
}

}  // namespace aslab
