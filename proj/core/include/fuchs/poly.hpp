#pragma once

#include "fuchs/bigcomplex.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fuchs {

/// Dense univariate polynomial over the rationals, coefficients ascending.
/// Normalized: no trailing zero coefficient unless the polynomial is zero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    static Poly monomial(const Rat& a, size_t k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    /// Order of vanishing at 0 (degree+1 convention: zero poly returns -1).
    long valuation() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    BigComplex eval(const BigComplex& x) const;
    /// p(x + a), exact Taylor shift.
    Poly shift(const Rat& a) const;
    /// x^deg * p(1/x) (coefficient reversal).
    Poly reverse() const;
    /// multiply by x^k
    Poly shift_up(size_t k) const;

    /// Quotient and remainder over Q; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    /// Monic gcd over Q.
    static Poly gcd(const Poly& a, const Poly& b);
    /// p / gcd(p, p'), monic; the radical without multiplicities.
    Poly squarefree_part() const;

    /// Scale to integer coefficients with content 1 and positive leading
    /// coefficient; returns the primitive polynomial.
    Poly primitive() const;
    /// Make leading coefficient 1.
    Poly monic() const;

    std::string str(const std::string& var = "w") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

/// Falling factorial s(s-1)...(s-i+1) as a polynomial in s.
Poly falling_factorial(unsigned i);

}  // namespace fuchs
