#include "aslab/dyadic.hpp"

#include <stdexcept>

namespace aslab {

namespace {

// floor(a / 2^k) for k >= 0 (arithmetic shift, rounds toward -inf).
mpz_class shift_floor(const mpz_class& a, unsigned long k) {
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

// ceil(a / 2^k).
mpz_class shift_ceil(const mpz_class& a, unsigned long k) {
    mpz_class r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

}  // namespace

void Dyadic::normalize() {
    if (sgn(mant_) == 0) {
        exp_ = 0;
        return;
    }
    unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
        exp_ += static_cast<long>(tz);
    }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma, mb;
    mpz_mul_2exp(ma.get_mpz_t(), a.mant_.get_mpz_t(), static_cast<unsigned long>(a.exp_ - e));
    mpz_mul_2exp(mb.get_mpz_t(), b.mant_.get_mpz_t(), static_cast<unsigned long>(b.exp_ - e));
    return Dyadic(ma + mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

int compare3(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma, mb;
    mpz_mul_2exp(ma.get_mpz_t(), a.mant_.get_mpz_t(), static_cast<unsigned long>(a.exp_ - e));
    mpz_mul_2exp(mb.get_mpz_t(), b.mant_.get_mpz_t(), static_cast<unsigned long>(b.exp_ - e));
    return cmp(ma, mb);
}

Rational Dyadic::to_rational() const {
    if (is_zero()) return Rational(0);
    mpz_class num = mant_, den = 1;
    if (exp_ >= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(exp_));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-exp_));
    }
    return Rational(num, den);
}

Dyadic Dyadic::round_to(int bits, Round dir) const {
    if (is_zero()) return *this;
    size_t sz = mpz_sizeinbase(mant_.get_mpz_t(), 2);
    if (sz <= static_cast<size_t>(bits)) return *this;
    unsigned long drop = static_cast<unsigned long>(sz - static_cast<size_t>(bits));
    mpz_class m = (dir == Round::Down) ? shift_floor(mant_, drop) : shift_ceil(mant_, drop);
    return Dyadic(m, exp_ + static_cast<long>(drop));
}

Dyadic Dyadic::from_rational(const Rational& r, int bits, Round dir) {
    if (r.is_zero()) return Dyadic();
    if (r.den() == 1) return Dyadic(r.num(), 0).round_to(bits, dir);
    // num/den scaled so the quotient carries `bits` significant bits.
    return div(Dyadic(r.num(), 0), r.den(), bits, dir);
}

Dyadic Dyadic::div(const Dyadic& a, const mpz_class& d, int bits, Round dir) {
    if (sgn(d) <= 0) throw std::invalid_argument("Dyadic::div: divisor must be positive");
    if (a.is_zero()) return Dyadic();
    size_t na = mpz_sizeinbase(a.mant_.get_mpz_t(), 2);
    size_t nd = mpz_sizeinbase(d.get_mpz_t(), 2);
    long shift = static_cast<long>(nd) + bits - static_cast<long>(na) + 2;
    if (shift < 0) shift = 0;
    mpz_class num;
    mpz_mul_2exp(num.get_mpz_t(), a.mant_.get_mpz_t(), static_cast<unsigned long>(shift));
    mpz_class qz;
    if (dir == Round::Down) {
        mpz_fdiv_q(qz.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    } else {
        mpz_cdiv_q(qz.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    }
    return Dyadic(qz, a.exp_ - shift).round_to(bits, dir);
}

Dyadic Dyadic::root(unsigned q, int bits, Round dir) const {
    if (q == 0) throw std::invalid_argument("Dyadic::root: q must be >= 1");
    if (sign() < 0) throw std::invalid_argument("Dyadic::root: negative value");
    if (q == 1 || is_zero()) return round_to(bits, dir);
    return rational_root(to_rational(), q, bits, dir);
}

std::string Dyadic::str() const { return mant_.get_str() + "*2^" + std::to_string(exp_); }

Dyadic rational_root(const Rational& r, unsigned q, int bits, Round dir) {
    if (r.sign() < 0) throw std::invalid_argument("rational_root: negative radicand");
    if (q == 0) throw std::invalid_argument("rational_root: q must be >= 1");
    if (r.is_zero()) return Dyadic();
    if (q == 1) return Dyadic::from_rational(r, bits, dir);
    // r^(1/q) = (num * den^(q-1))^(1/q) / den; the integer root is scaled by
    // 2^(q*s) so that floor-root brackets the value within 2^-s relatively.
    mpz_class scaled;
    mpz_pow_ui(scaled.get_mpz_t(), r.den().get_mpz_t(), q - 1);
    scaled *= r.num();
    long s = bits + 4;
    mpz_class shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(q) * s);
    mpz_class root_floor;
    mpz_root(root_floor.get_mpz_t(), shifted.get_mpz_t(), q);
    // value * den * 2^s lies in [root_floor, root_floor + 1]
    mpz_class m = (dir == Round::Down) ? root_floor : mpz_class(root_floor + 1);
    return Dyadic::div(Dyadic(m, -s), r.den(), bits + 4, dir).round_to(bits + 4, dir);
}

}  // namespace aslab
