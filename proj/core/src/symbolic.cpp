#include "fuchs/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace fuchs {

void BiPoly::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::constant(const Rat& c) {
    BiPoly p;
    if (c != 0) p.c_ = {{c}};
    return p;
}

BiPoly BiPoly::var_a() { return term(Rat(1), 1, 0); }
BiPoly BiPoly::var_b() { return term(Rat(1), 0, 1); }

BiPoly BiPoly::term(const Rat& c, unsigned i, unsigned j) {
    BiPoly p;
    if (c == 0) return p;
    p.c_.assign(i + 1, {});
    p.c_[i].assign(j + 1, Rat(0));
    p.c_[i][j] = c;
    return p;
}

long BiPoly::deg_b() const {
    long d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<long>(row.size()) - 1);
    return d;
}

Rat BiPoly::coeff(size_t i, size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return Rat(0);
    return c_[i][j];
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& row : r.c_)
        for (auto& v : row) v = -v;
    return r;
}

BiPoly operator+(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    r.c_.resize(std::max(x.c_.size(), y.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        size_t w = 0;
        if (i < x.c_.size()) w = std::max(w, x.c_[i].size());
        if (i < y.c_.size()) w = std::max(w, y.c_[i].size());
        r.c_[i].assign(w, Rat(0));
        for (size_t j = 0; j < w; ++j) {
            if (i < x.c_.size() && j < x.c_[i].size()) r.c_[i][j] += x.c_[i][j];
            if (i < y.c_.size() && j < y.c_[i].size()) r.c_[i][j] += y.c_[i][j];
        }
    }
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& x, const BiPoly& y) { return x + (-y); }

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    if (x.is_zero() || y.is_zero()) return r;
    r.c_.assign(x.c_.size() + y.c_.size() - 1, {});
    size_t wx = 0, wy = 0;
    for (const auto& row : x.c_) wx = std::max(wx, row.size());
    for (const auto& row : y.c_) wy = std::max(wy, row.size());
    for (auto& row : r.c_) row.assign(wx + wy - 1, Rat(0));
    for (size_t i = 0; i < x.c_.size(); ++i)
        for (size_t j = 0; j < x.c_[i].size(); ++j) {
            if (x.c_[i][j] == 0) continue;
            for (size_t k = 0; k < y.c_.size(); ++k)
                for (size_t l = 0; l < y.c_[k].size(); ++l) {
                    if (y.c_[k][l] == 0) continue;
                    r.c_[i + k][j + l] += x.c_[i][j] * y.c_[k][l];
                }
        }
    r.trim();
    return r;
}

BiPoly operator*(const Rat& c, const BiPoly& y) {
    if (c == 0) return {};
    BiPoly r = y;
    for (auto& row : r.c_)
        for (auto& v : row) v *= c;
    return r;
}

namespace {

// View a BiPoly as a polynomial in `a` with Poly (in b) coefficients.
std::vector<Poly> to_nested(const BiPoly& p) {
    std::vector<Poly> out;
    for (long i = 0; i <= p.deg_a(); ++i) {
        std::vector<Rat> row;
        for (long j = 0; j <= p.deg_b(); ++j) row.push_back(p.coeff(i, j));
        out.push_back(Poly(std::move(row)));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

BiPoly from_nested(const std::vector<Poly>& v) {
    BiPoly r;
    for (size_t i = 0; i < v.size(); ++i)
        for (long j = 0; j <= v[i].degree(); ++j)
            r = r + BiPoly::term(v[i].coeff(j), static_cast<unsigned>(i),
                                 static_cast<unsigned>(j));
    return r;
}

// pseudo-division in (Q[b])[a]
void pseudo_divmod(const std::vector<Poly>& num, const std::vector<Poly>& den,
                   std::vector<Poly>& rem) {
    rem = num;
    if (den.empty()) throw std::logic_error("BiPoly: division by zero");
    const Poly& lead = den.back();
    while (rem.size() >= den.size()) {
        if (rem.back().is_zero()) {
            rem.pop_back();
            continue;
        }
        size_t shift = rem.size() - den.size();
        Poly top = rem.back();
        // rem = lead * rem - top * a^shift * den
        for (auto& r : rem) r = lead * r;
        for (size_t i = 0; i < den.size(); ++i)
            rem[shift + i] = rem[shift + i] - top * den[i];
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
}

Poly content_of(const std::vector<Poly>& v) {
    Poly g;
    for (const auto& p : v) {
        g = Poly::gcd(g, p);
        if (g.degree() == 0 && !g.is_zero()) break;
    }
    return g;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& x, const BiPoly& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    std::vector<Poly> a = to_nested(x), b = to_nested(y);
    // contents (gcd over Q[b]) split off
    Poly ca = content_of(a), cb = content_of(b);
    Poly cg = Poly::gcd(ca, cb);
    for (auto& p : a) p = Poly::div_exact(p, ca);
    for (auto& p : b) p = Poly::div_exact(p, cb);
    // primitive Euclid in (Q[b])[a]
    while (!b.empty()) {
        std::vector<Poly> r;
        pseudo_divmod(a, b, r);
        Poly cr = content_of(r);
        if (!cr.is_zero())
            for (auto& p : r) p = Poly::div_exact(p, cr);
        a = std::move(b);
        b = std::move(r);
    }
    Poly cra = content_of(a);
    if (!cra.is_zero())
        for (auto& p : a) p = Poly::div_exact(p, cra);
    std::vector<Poly> g;
    for (const auto& p : a) g.push_back(cg * p);
    BiPoly out = from_nested(g);
    // normalize: positive leading rational coefficient, primitive integers
    Rat leadc(0);
    for (size_t i = out.c_.size(); i-- > 0 && leadc == 0;)
        for (size_t j = out.c_[i].size(); j-- > 0;)
            if (out.c_[i][j] != 0) {
                leadc = out.c_[i][j];
                break;
            }
    if (leadc != 0) out = Rat(1) / leadc * out;
    return out;
}

BiPoly BiPoly::div_exact(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw std::logic_error("BiPoly: division by zero");
    if (num.is_zero()) return {};
    // long division in (Q(b))[a] with exact Poly division per step
    std::vector<Poly> n = to_nested(num), d = to_nested(den);
    std::vector<Poly> q(n.size() >= d.size() ? n.size() - d.size() + 1 : 0);
    while (n.size() >= d.size()) {
        if (n.back().is_zero()) {
            n.pop_back();
            continue;
        }
        size_t shift = n.size() - d.size();
        // exact division of leading Poly coefficients in Q[b]
        auto [qq, rr] = Poly::divmod(n.back(), d.back());
        if (!rr.is_zero()) throw std::logic_error("BiPoly: inexact division");
        q[shift] = qq;
        for (size_t i = 0; i < d.size(); ++i) n[shift + i] = n[shift + i] - qq * d[i];
        while (!n.empty() && n.back().is_zero()) n.pop_back();
    }
    if (!n.empty()) throw std::logic_error("BiPoly: inexact division");
    return from_nested(q);
}

BiPoly BiPoly::scale_b(const Rat& s) const {
    BiPoly r = *this;
    for (auto& row : r.c_) {
        Rat f(1);
        for (size_t j = 0; j < row.size(); ++j) {
            row[j] *= f;
            f *= s;
        }
    }
    r.trim();
    return r;
}

BigComplex BiPoly::eval(const BigComplex& a, const BigComplex& b) const {
    mpfr_prec_t bits = std::max(a.prec(), b.prec());
    BigComplex acc(bits);
    for (size_t i = c_.size(); i-- > 0;) {
        BigComplex row(bits);
        for (size_t j = c_[i].size(); j-- > 0;)
            row = row * b + BigComplex(c_[i][j], bits);
        acc = acc * a + row;
    }
    return acc;
}

Rat BiPoly::eval(const Rat& a, const Rat& b) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        Rat row(0);
        for (size_t j = c_[i].size(); j-- > 0;) row = row * b + c_[i][j];
        acc = acc * a + row;
    }
    return acc;
}

std::string BiPoly::str(const std::string& a, const std::string& b) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            const Rat& v = c_[i][j];
            if (v == 0) continue;
            if (!first) os << (v < 0 ? " - " : " + ");
            else if (v < 0) os << "-";
            first = false;
            Rat mag = ::abs(v);
            bool unitc = (mag == 1) && (i > 0 || j > 0);
            if (!unitc) os << mag.get_str();
            if (i > 0) {
                if (!unitc || j > 0) os << (unitc ? "" : "*");
                os << a;
                if (i > 1) os << "^" << i;
                unitc = false;
            }
            if (j > 0) {
                if (!unitc) os << "*";
                os << b;
                if (j > 1) os << "^" << j;
            }
        }
    return os.str();
}

// ---------------------------------------------------------------------

RatFun2::RatFun2(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun2: zero denominator");
    if (num_.is_zero()) {
        den_ = BiPoly::constant(Rat(1));
        return;
    }
    BiPoly g = BiPoly::gcd(num_, den_);
    if (!(g == BiPoly::constant(Rat(1)))) {
        num_ = BiPoly::div_exact(num_, g);
        den_ = BiPoly::div_exact(den_, g);
    }
    // canonical: leading coefficient of den (lex in a, then b) positive one
    Rat lead(0);
    for (long i = den_.deg_a(); i >= 0 && lead == 0; --i)
        for (long j = den_.deg_b(); j >= 0; --j)
            if (den_.coeff(i, j) != 0) {
                lead = den_.coeff(i, j);
                break;
            }
    if (lead != 0 && lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFun2 RatFun2::operator-() const {
    RatFun2 r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun2 operator+(const RatFun2& x, const RatFun2& y) {
    return RatFun2(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFun2 operator-(const RatFun2& x, const RatFun2& y) { return x + (-y); }

RatFun2 operator*(const RatFun2& x, const RatFun2& y) {
    return RatFun2(x.num_ * y.num_, x.den_ * y.den_);
}

RatFun2 operator/(const RatFun2& x, const RatFun2& y) {
    if (y.is_zero()) throw std::domain_error("RatFun2: division by zero");
    return RatFun2(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const RatFun2& x, const RatFun2& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string RatFun2::str(const std::string& a, const std::string& b) const {
    if (den_ == BiPoly::constant(Rat(1))) return num_.str(a, b);
    return "(" + num_.str(a, b) + ")/(" + den_.str(a, b) + ")";
}

// ---------------------------------------------------------------------

SymbolicMatrix::SymbolicMatrix(size_t rows, size_t cols)
    : r_(rows), k_(cols), d_(rows * cols) {}

SymbolicMatrix SymbolicMatrix::identity(size_t n) {
    SymbolicMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFun2::constant(Rat(1));
    return m;
}

SymbolicMatrix operator*(const SymbolicMatrix& x, const SymbolicMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("SymbolicMatrix: shape mismatch");
    SymbolicMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k) {
            const RatFun2& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < y.cols(); ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + v * y.at(k, j);
            }
        }
    return r;
}

SymbolicMatrix operator-(const SymbolicMatrix& x, const SymbolicMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("SymbolicMatrix: shape mismatch");
    SymbolicMatrix r(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
    return r;
}

bool operator==(const SymbolicMatrix& x, const SymbolicMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j)
            if (!(x.at(i, j) == y.at(i, j))) return false;
    return true;
}

RatFun2 SymbolicMatrix::determinant() const {
    if (r_ != k_) throw std::invalid_argument("SymbolicMatrix: not square");
    // cofactor expansion is fine at the fixture sizes (n <= 6 with sparsity)
    if (r_ == 0) return RatFun2::constant(Rat(1));
    if (r_ == 1) return at(0, 0);
    RatFun2 acc;
    int sign = 1;
    for (size_t j = 0; j < k_; ++j) {
        if (!at(0, j).is_zero()) {
            SymbolicMatrix minor(r_ - 1, k_ - 1);
            for (size_t i = 1; i < r_; ++i) {
                size_t cc = 0;
                for (size_t c = 0; c < k_; ++c) {
                    if (c == j) continue;
                    minor.at(i - 1, cc++) = at(i, c);
                }
            }
            RatFun2 term = at(0, j) * minor.determinant();
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

CMatrix SymbolicMatrix::eval(const BigComplex& a, const BigComplex& b,
                             mpfr_prec_t bits) const {
    CMatrix m(r_, k_, bits);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < k_; ++j) {
            const RatFun2& v = at(i, j);
            if (v.is_zero()) continue;
            m.at(i, j) = v.num().eval(a, b) / v.den().eval(a, b);
        }
    return m;
}

}  // namespace fuchs
