#include "fuchs/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fuchs {

Poly Poly::monomial(const Rat& a, size_t k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = a;
    return Poly(std::move(c));
}

long Poly::valuation() const {
    if (c_.empty()) return -1;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<long>(k);
    return -1;
}

Poly Poly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& a, const Poly& b) {
    if (a == 0) return {};
    std::vector<Rat> r(b.c_.size());
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = a * b.c_[i];
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

BigComplex Poly::eval(const BigComplex& x) const {
    BigComplex acc(x.prec());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigComplex(c_[i], x.prec());
    return acc;
}

Poly Poly::shift(const Rat& a) const {
    // repeated synthetic division by (x - a)
    if (a == 0 || is_zero()) return *this;
    std::vector<Rat> work = c_;
    std::vector<Rat> out(c_.size(), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        for (size_t i = work.size() - 1; i > k; --i) work[i - 1] += a * work[i];
        out[k] = work[k];
        // next round starts from index k+1 (quotient coefficients in place)
    }
    return Poly(std::move(out));
}

Poly Poly::reverse() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly Poly::shift_up(size_t k) const {
    if (is_zero()) return {};
    std::vector<Rat> r(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
    const Rat lead = b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[k + b.degree()] / lead;
        quo[k] = q;
        if (q == 0) continue;
        for (long j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("Poly: inexact division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Poly Poly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    Poly g = gcd(*this, derivative());
    return div_exact(*this, g).monic();
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    Int den(1);
    for (const Rat& q : c_) den = lcm(den, Int(q.get_den()));
    Int content(0);
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Int z = Int(c_[i].get_num()) * den / Int(c_[i].get_den());
        content = ::gcd(content, z);
        r[i] = Rat(z);
    }
    if (content == 0) return {};
    if (r.back() < 0) content = -content;
    for (auto& q : r) q /= Rat(content);
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return Rat(1) / leading() * (*this);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rat a = c_[k];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Rat mag = ::abs(a);
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Poly falling_factorial(unsigned i) {
    Poly p{Rat(1)};
    Poly s{Rat(0), Rat(1)};
    for (unsigned k = 0; k < i; ++k) p = p * (s - Poly::constant(Rat(static_cast<long>(k))));
    return p;
}

}  // namespace fuchs
