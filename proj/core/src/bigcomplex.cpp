#include "fuchs/bigcomplex.hpp"

#include <ostream>
#include <stdexcept>

namespace fuchs {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = abs_sq(b);
    if (d.is_zero()) throw std::domain_error("BigComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string BigComplex::str(long digits) const {
    return "(" + re.str(digits) + (im.is_negative() ? " - " : " + ") +
           abs(im).str(digits) + "*I)";
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigFloat abs_sq(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigFloat abs(const BigComplex& z) {
    BigFloat r(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex sqrt(const BigComplex& z) {
    if (z.im.is_zero() && !z.re.is_negative()) return {sqrt(z.re), BigFloat(z.prec())};
    // principal: sqrt(|z|) * e^{i arg/2}
    BigFloat r = sqrt(abs(z));
    BigFloat half(Rat(1, 2), z.prec());
    BigFloat t = arg(z) * half;
    return {r * cos(t), r * sin(t)};
}

BigComplex exp(const BigComplex& z) {
    BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw std::domain_error("BigComplex: log of zero");
    return {log(abs(z)), arg(z)};
}

BigComplex log_dir(const BigComplex& z, const BigComplex& direction) {
    if (z.is_zero()) throw std::domain_error("BigComplex: log of zero");
    return {log(abs(z)), arg(z * conj(direction))};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
    if (z.is_zero()) {
        if (w.is_zero()) return BigComplex(1L, z.prec());
        return BigComplex(z.prec());
    }
    return exp(w * log(z));
}

BigComplex pow_rat_dir(const BigComplex& z, const Rat& e, const BigComplex& direction) {
    mpfr_prec_t p = std::max(z.prec(), direction.prec());
    if (e == 0) return BigComplex(1L, p);
    if (z.is_zero()) {
        if (e < 0) throw std::domain_error("BigComplex: negative power of zero");
        return BigComplex(p);
    }
    if (e.get_den() == 1 && mpz_fits_slong_p(e.get_num().get_mpz_t())) {
        // integer exponent: branch-free, do it by squaring
        long n = e.get_num().get_si();
        bool inv = n < 0;
        unsigned long k = inv ? -static_cast<unsigned long>(n) : n;
        BigComplex acc(1L, p), base = z;
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return inv ? BigComplex(1L, p) / acc : acc;
    }
    return exp(BigFloat(e, p) * log_dir(z, direction));
}

BigComplex unit_root(const Rat& r, mpfr_prec_t bits) {
    BigFloat two_pi_r = BigFloat(2 * r, bits) * const_pi(bits);
    return {cos(two_pi_r), sin(two_pi_r)};
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.str(25); }

}  // namespace fuchs
