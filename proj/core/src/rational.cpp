#include "aslab/rational.hpp"

namespace aslab {

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(mpz_class(text), mpz_class(1));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (is_zero()) throw std::invalid_argument("Rational::pow: 0 to negative power");
        return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace aslab
