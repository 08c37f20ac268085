#pragma once

#include "fuchs/cmatrix.hpp"
#include "fuchs/poly.hpp"

#include <string>
#include <vector>

namespace fuchs {

/// Dense bivariate polynomial over Q in two formal symbols (alpha, Omega by
/// default). coeff[i][j] multiplies a^i * b^j.
class BiPoly {
public:
    BiPoly() = default;
    static BiPoly constant(const Rat& c);
    static BiPoly var_a();  // alpha
    static BiPoly var_b();  // Omega
    static BiPoly term(const Rat& c, unsigned i, unsigned j);

    bool is_zero() const { return c_.empty(); }
    long deg_a() const { return static_cast<long>(c_.size()) - 1; }
    long deg_b() const;
    Rat coeff(size_t i, size_t j) const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& x, const BiPoly& y);
    friend BiPoly operator-(const BiPoly& x, const BiPoly& y);
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
    friend BiPoly operator*(const Rat& c, const BiPoly& y);
    friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.c_ == y.c_; }

    /// Exact division; throws std::logic_error if not divisible.
    static BiPoly div_exact(const BiPoly& num, const BiPoly& den);
    static BiPoly gcd(const BiPoly& x, const BiPoly& y);

    /// Substitute b -> s*b (e.g. Omega -> N*Omega).
    BiPoly scale_b(const Rat& s) const;
    /// Substitute numeric values.
    BigComplex eval(const BigComplex& a, const BigComplex& b) const;
    Rat eval(const Rat& a, const Rat& b) const;

    std::string str(const std::string& a = "alpha", const std::string& b = "Omega") const;

private:
    void trim();
    std::vector<std::vector<Rat>> c_;  // c_[i][j] * a^i b^j
    friend struct BiPolyAccess;
};

/// Reduced bivariate rational function num/den over Q.
class RatFun2 {
public:
    RatFun2() : num_(), den_(BiPoly::constant(Rat(1))) {}
    RatFun2(BiPoly num, BiPoly den);
    static RatFun2 of(const BiPoly& p) { return RatFun2(p, BiPoly::constant(Rat(1))); }
    static RatFun2 constant(const Rat& c) { return of(BiPoly::constant(c)); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun2 operator-() const;
    friend RatFun2 operator+(const RatFun2& x, const RatFun2& y);
    friend RatFun2 operator-(const RatFun2& x, const RatFun2& y);
    friend RatFun2 operator*(const RatFun2& x, const RatFun2& y);
    friend RatFun2 operator/(const RatFun2& x, const RatFun2& y);
    friend bool operator==(const RatFun2& x, const RatFun2& y);

    std::string str(const std::string& a = "alpha", const std::string& b = "Omega") const;

private:
    BiPoly num_, den_;
};

/// Matrix over RatFun2; the carrier for the explicit monodromy fixtures.
class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    SymbolicMatrix(size_t rows, size_t cols);
    static SymbolicMatrix identity(size_t n);

    size_t rows() const { return r_; }
    size_t cols() const { return k_; }
    RatFun2& at(size_t i, size_t j) { return d_[i * k_ + j]; }
    const RatFun2& at(size_t i, size_t j) const { return d_[i * k_ + j]; }

    friend SymbolicMatrix operator*(const SymbolicMatrix& x, const SymbolicMatrix& y);
    friend SymbolicMatrix operator-(const SymbolicMatrix& x, const SymbolicMatrix& y);
    friend bool operator==(const SymbolicMatrix& x, const SymbolicMatrix& y);

    RatFun2 determinant() const;  // fraction-free over the cleared numerators
    CMatrix eval(const BigComplex& a, const BigComplex& b, mpfr_prec_t bits) const;

private:
    size_t r_ = 0, k_ = 0;
    std::vector<RatFun2> d_;
};

}  // namespace fuchs
