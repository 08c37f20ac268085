#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace fuchs {

using Int = mpz_class;
using Rat = mpq_class;

// Conversion between decimal digits and mpfr significand bits. A small
// guard is added so that "P digits" survives a handful of roundings.
mpfr_prec_t bits_for_digits(long digits);
long digits_for_bits(mpfr_prec_t bits);

/// Arbitrary-precision real backed by mpfr. Every value carries its own
/// working precision; binary operations run at the max of the operand
/// precisions, so precision is contagious rather than global state.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const Rat& q, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const Int& z, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    long digits() const { return digits_for_bits(prec()); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Decimal string with `digits` significant digits (scientific form).
    std::string str(long digits = 0) const;
    /// Parse a decimal string at the given working precision.
    static BigFloat parse(const std::string& s, long digits);

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& a, const BigFloat& b);
BigFloat pow_si(const BigFloat& a, long e);
BigFloat floor(const BigFloat& a);
BigFloat round(const BigFloat& a);
Int round_to_int(const BigFloat& a);
BigFloat ldexp2(const BigFloat& a, long e);  // a * 2^e

BigFloat const_pi(mpfr_prec_t bits);
BigFloat const_log2(mpfr_prec_t bits);
BigFloat const_euler(mpfr_prec_t bits);
BigFloat const_catalan(mpfr_prec_t bits);
BigFloat zeta_ui(unsigned long n, mpfr_prec_t bits);
BigFloat zeta(const BigFloat& s);
BigFloat gamma(const BigFloat& x);

/// 10^-k at a precision wide enough to hold it; handy for tolerances.
BigFloat pow10(long k, mpfr_prec_t bits = 96);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace fuchs
