#include "fuchs/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace fuchs {

mpfr_prec_t bits_for_digits(long digits) {
    if (digits < 1) digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

long digits_for_bits(mpfr_prec_t bits) {
    return static_cast<long>(std::floor((bits - 16) / 3.3219280948873626));
}

static mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}

std::string BigFloat::str(long digits) const {
    if (digits <= 0) digits = digits_for_bits(prec());
    if (digits < 2) digits = 2;
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
    return std::string(buf.data());
}

BigFloat BigFloat::parse(const std::string& s, long digits) {
    BigFloat r(bits_for_digits(digits));
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat::parse: bad decimal literal: " + s);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define FUCHS_BF_BINOP(op, fn)                                  \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
        BigFloat r(joint(a, b));                                 \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
        return r;                                                \
    }

FUCHS_BF_BINOP(+, mpfr_add)
FUCHS_BF_BINOP(-, mpfr_sub)
FUCHS_BF_BINOP(*, mpfr_mul)
FUCHS_BF_BINOP(/, mpfr_div)
#undef FUCHS_BF_BINOP

#define FUCHS_BF_UNFN(name, fn)            \
    BigFloat name(const BigFloat& a) {     \
        BigFloat r(a.prec());              \
        fn(r.raw(), a.raw(), MPFR_RNDN);   \
        return r;                          \
    }

FUCHS_BF_UNFN(abs, mpfr_abs)
FUCHS_BF_UNFN(sqrt, mpfr_sqrt)
FUCHS_BF_UNFN(exp, mpfr_exp)
FUCHS_BF_UNFN(log, mpfr_log)
FUCHS_BF_UNFN(sin, mpfr_sin)
FUCHS_BF_UNFN(cos, mpfr_cos)
FUCHS_BF_UNFN(zeta, mpfr_zeta)
FUCHS_BF_UNFN(gamma, mpfr_gamma)
#undef FUCHS_BF_UNFN

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(joint(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat floor(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

BigFloat round(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_round(r.raw(), a.raw());
    return r;
}

Int round_to_int(const BigFloat& a) {
    Int z;
    mpfr_get_z(z.get_mpz_t(), round(a).raw(), MPFR_RNDZ);
    return z;
}

BigFloat ldexp2(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat const_pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat const_log2(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat const_euler(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat const_catalan(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat zeta_ui(unsigned long n, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat pow10(long k, mpfr_prec_t bits) {
    BigFloat ten(10L, bits);
    return pow_si(ten, k);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    return os << x.str(std::min<long>(x.digits(), 25));
}

}  // namespace fuchs
