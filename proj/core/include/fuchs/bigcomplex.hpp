#pragma once

#include "fuchs/bigfloat.hpp"

namespace fuchs {

/// Complex number over BigFloat. mpc is not available on this toolchain,
/// so the usual formulas are spelled out; precision follows BigFloat rules.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(long r, mpfr_prec_t bits) : re(r, bits), im(bits) {}
    BigComplex(const Rat& q, mpfr_prec_t bits) : re(q, bits), im(bits) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
        return {a * b.re, a * b.im};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
    BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
    BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
    BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

    std::string str(long digits = 0) const;
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat abs_sq(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigFloat arg(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
/// log with the branch rotated so that `direction` has argument zero:
/// log_dir(z) = log|z| + i*arg(z/direction). `direction` must be unit-modulus.
BigComplex log_dir(const BigComplex& z, const BigComplex& direction);
BigComplex pow(const BigComplex& z, const BigComplex& w);  // principal
/// z^(p/q) along the rotated branch; exact rational exponent.
BigComplex pow_rat_dir(const BigComplex& z, const Rat& e, const BigComplex& direction);
/// e^(2*pi*i*r) computed from exact trig of the rational angle.
BigComplex unit_root(const Rat& r, mpfr_prec_t bits);

inline BigComplex make_i(mpfr_prec_t bits) {
    return BigComplex(BigFloat(bits), BigFloat(1L, bits));
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace fuchs
