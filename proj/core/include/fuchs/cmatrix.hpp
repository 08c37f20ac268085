#pragma once

#include "fuchs/bigcomplex.hpp"

#include <vector>

namespace fuchs {

/// Dense matrix over BigComplex.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols, mpfr_prec_t bits)
        : rows_(rows), cols_(cols), d_(rows * cols, BigComplex(bits)) {}
    static CMatrix identity(size_t n, mpfr_prec_t bits);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigComplex& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const BigComplex& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);

    /// max_{ij} |a_ij|
    BigFloat max_norm() const;
    CMatrix inverse() const;
    BigComplex determinant() const;
    /// Solve A X = B by LU with partial pivoting.
    static CMatrix solve(const CMatrix& A, const CMatrix& B);
    /// Rough condition estimate ||A||_max * ||A^-1||_max * n.
    BigFloat cond_estimate() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<BigComplex> d_;
};

}  // namespace fuchs
