#pragma once

#include <gmpxx.h>

#include <string>

#include "aslab/rational.hpp"

namespace aslab {

enum class Round { Down, Up };  // toward -inf / toward +inf

// Dyadic rational m * 2^e. Addition and multiplication are exact; rounding
// happens only when truncating to a bit budget or converting non-dyadic
// rationals, always in a caller-chosen direction.
class Dyadic {
  public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long m) : mant_(m), exp_(0) { normalize(); }  // NOLINT(google-explicit-constructor)
    Dyadic(mpz_class m, long e) : mant_(std::move(m)), exp_(e) { normalize(); }

    static Dyadic from_rational(const Rational& r, int bits, Round dir);
    // Quotient of dyadic by positive integer, rounded in direction at `bits`.
    static Dyadic div(const Dyadic& a, const mpz_class& d, int bits, Round dir);

    const mpz_class& mant() const { return mant_; }
    long exp() const { return exp_; }
    int sign() const { return sgn(mant_); }
    bool is_zero() const { return sgn(mant_) == 0; }

    Rational to_rational() const;

    Dyadic operator-() const { return Dyadic(mpz_class(-mant_), exp_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    Dyadic mul_pow2(long k) const { return is_zero() ? *this : Dyadic(mant_, exp_ + k); }

    // Keep at most `bits` significant bits, rounding in `dir`.
    Dyadic round_to(int bits, Round dir) const;

    // q-th root (value must be >= 0), rounded in `dir` with `bits` precision.
    Dyadic root(unsigned q, int bits, Round dir) const;

    friend int compare3(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare3(a, b) == 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare3(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare3(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare3(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare3(a, b) >= 0; }

    std::string str() const;  // "M*2^E"

  private:
    void normalize();  // strip trailing zero bits, pin zero to exponent 0

    mpz_class mant_;
    long exp_;
};

// Directed q-th root of a nonnegative rational: a dyadic d with
// d <= r^(1/q) (Down) or d >= r^(1/q) (Up), within 2^(1-bits) * max(1, value).
Dyadic rational_root(const Rational& r, unsigned q, int bits, Round dir);

}  // namespace aslab
