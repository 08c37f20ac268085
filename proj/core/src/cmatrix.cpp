#include "fuchs/cmatrix.hpp"

#include <stdexcept>

namespace fuchs {

CMatrix CMatrix::identity(size_t n, mpfr_prec_t bits) {
    CMatrix m(n, n, bits);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = BigComplex(1L, bits);
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix: shape mismatch in mul");
    mpfr_prec_t bits = 64;
    if (a.rows_ && a.cols_) bits = std::max(bits, a.at(0, 0).prec());
    if (b.rows_ && b.cols_) bits = std::max(bits, b.at(0, 0).prec());
    CMatrix r(a.rows(), b.cols(), bits);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const BigComplex& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix r = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix r = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

BigFloat CMatrix::max_norm() const {
    BigFloat m(64);
    for (const auto& z : d_) {
        BigFloat a = abs(z);
        if (a > m) m = a;
    }
    return m;
}

CMatrix CMatrix::solve(const CMatrix& A, const CMatrix& B) {
    if (A.rows() != A.cols() || A.rows() != B.rows())
        throw std::invalid_argument("CMatrix::solve: shape mismatch");
    const size_t n = A.rows(), m = B.cols();
    CMatrix U = A, X = B;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        BigFloat best = abs(U.at(c, c));
        for (size_t i = c + 1; i < n; ++i) {
            BigFloat a = abs(U.at(i, c));
            if (a > best) {
                best = a;
                sel = i;
            }
        }
        if (best.is_zero()) throw std::domain_error("CMatrix::solve: singular matrix");
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(U.at(c, j), U.at(sel, j));
            for (size_t j = 0; j < m; ++j) std::swap(X.at(c, j), X.at(sel, j));
        }
        for (size_t i = c + 1; i < n; ++i) {
            BigComplex f = U.at(i, c) / U.at(c, c);
            if (f.is_zero()) continue;
            for (size_t j = c; j < n; ++j) U.at(i, j) -= f * U.at(c, j);
            for (size_t j = 0; j < m; ++j) X.at(i, j) -= f * X.at(c, j);
        }
    }
    for (size_t i = n; i-- > 0;) {
        for (size_t j = 0; j < m; ++j) {
            BigComplex acc = X.at(i, j);
            for (size_t k = i + 1; k < n; ++k) acc -= U.at(i, k) * X.at(k, j);
            X.at(i, j) = acc / U.at(i, i);
        }
    }
    return X;
}

CMatrix CMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("CMatrix::inverse: not square");
    mpfr_prec_t bits = rows_ ? at(0, 0).prec() : 64;
    return solve(*this, identity(rows_, bits));
}

BigComplex CMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("CMatrix::determinant: not square");
    const size_t n = rows_;
    mpfr_prec_t bits = n ? at(0, 0).prec() : 64;
    CMatrix U = *this;
    BigComplex det(1L, bits);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        BigFloat best = abs(U.at(c, c));
        for (size_t i = c + 1; i < n; ++i) {
            BigFloat a = abs(U.at(i, c));
            if (a > best) {
                best = a;
                sel = i;
            }
        }
        if (best.is_zero()) return BigComplex(bits);
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(U.at(c, j), U.at(sel, j));
            det = -det;
        }
        det *= U.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            BigComplex f = U.at(i, c) / U.at(c, c);
            if (f.is_zero()) continue;
            for (size_t j = c; j < n; ++j) U.at(i, j) -= f * U.at(c, j);
        }
    }
    return det;
}

BigFloat CMatrix::cond_estimate() const {
    BigFloat n(static_cast<long>(rows_), 64);
    return max_norm() * inverse().max_norm() * n;
}

}  // namespace fuchs
