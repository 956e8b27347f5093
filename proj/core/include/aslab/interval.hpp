#pragma once

#include <optional>
#include <string>

#include "aslab/dyadic.hpp"
#include "aslab/rational.hpp"

namespace aslab {

// Verdict of an interval comparison. Undecided means the enclosures overlap;
// callers refine precision or surface the diagnostic, never guess.
enum class IntervalOrder { Less, Greater, Undecided };

// Certified enclosure [lo, hi] with dyadic endpoints; the represented true
// value always lies inside. All arithmetic rounds lo down and hi up.
class CertInterval {
  public:
    CertInterval() : lo_(0), hi_(0), bits_(64) {}
    CertInterval(Dyadic lo, Dyadic hi, int bits);

    static CertInterval point(const Dyadic& d, int bits) { return CertInterval(d, d, bits); }
    static CertInterval from_rational(const Rational& r, int bits);
    static CertInterval exact_zero(int bits) { return point(Dyadic(0), bits); }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    int bits() const { return bits_; }

    bool is_point() const { return lo_ == hi_; }
    Dyadic width() const { return hi_ - lo_; }
    bool contains(const Rational& r) const;
    bool intersects(const CertInterval& o) const { return !(hi_ < o.lo_) && !(o.hi_ < lo_); }

    CertInterval round_out(int bits) const;

    friend CertInterval operator+(const CertInterval& a, const CertInterval& b);
    friend CertInterval operator-(const CertInterval& a, const CertInterval& b);
    friend CertInterval operator*(const CertInterval& a, const CertInterval& b);

    CertInterval scale(const Rational& r) const;     // exact rational scalar
    CertInterval pow_ui(unsigned e) const;           // requires lo >= 0
    CertInterval root(unsigned q) const;             // requires lo >= 0
    static CertInterval max(const CertInterval& a, const CertInterval& b);
    static CertInterval hull(const CertInterval& a, const CertInterval& b);

    std::string str() const;

  private:
    Dyadic lo_, hi_;
    int bits_;
};

IntervalOrder interval_compare(const CertInterval& a, const CertInterval& b);

// Compare an interval against an exact rational (decidable unless r is inside).
IntervalOrder interval_compare(const CertInterval& a, const Rational& r);

}  // namespace aslab
