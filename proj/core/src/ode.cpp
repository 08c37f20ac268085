#include "fuchs/ode.hpp"

#include <sstream>
#include <stdexcept>

namespace fuchs {

FuchsianODE::FuchsianODE(std::vector<Poly> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.size() < 2)
        throw std::invalid_argument("FuchsianODE: need order >= 1 with nonzero leading coefficient");
    // remove common polynomial factor
    Poly g = c_[0];
    for (size_t i = 1; i < c_.size() && g.degree() != 0; ++i) g = Poly::gcd(g, c_[i]);
    if (!g.is_zero() && g.degree() > 0)
        for (auto& p : c_) p = Poly::div_exact(p, g);
    // integer content normalization across all coefficients
    Int den(1);
    for (const auto& p : c_)
        for (const Rat& q : p.coeffs()) den = lcm(den, Int(q.get_den()));
    Int content(0);
    for (const auto& p : c_)
        for (const Rat& q : p.coeffs())
            content = gcd(content, Int(q.get_num()) * den / Int(q.get_den()));
    if (content == 0) throw std::invalid_argument("FuchsianODE: zero operator");
    if (c_.back().leading() < 0) content = -content;
    Rat scale = Rat(den) / Rat(content);
    for (auto& p : c_) p = scale * p;
}

std::vector<Poly> FuchsianODE::shifted_coeffs(const Rat& p) const {
    std::vector<Poly> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(a.shift(p));
    return out;
}

FuchsianODE FuchsianODE::at_infinity() const {
    // w = 1/t, d/dw = -t^2 d/dt. (-t^2 D)^i = sum_j c_{i,j}(t) D_t^j.
    const unsigned n = order();
    const Poly mt2({Rat(0), Rat(0), Rat(-1)});
    std::vector<std::vector<Poly>> op(n + 1, std::vector<Poly>(n + 1));
    op[0][0] = Poly::constant(Rat(1));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j <= i + 1; ++j) {
            Poly t = op[i][j].derivative();
            if (j > 0) t = t + op[i][j - 1];
            op[i + 1][j] = mt2 * t;
        }
    // a_i(1/t) = t^{-deg a_i} * rev(a_i)(t); clear with a global t^D factor
    long D = 0;
    for (const auto& a : c_) D = std::max(D, a.degree());
    std::vector<Poly> out(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Poly acc;
        for (unsigned i = j; i <= n; ++i) {
            if (c_[i].is_zero() || op[i][j].is_zero()) continue;
            Poly rev = c_[i].reverse().shift_up(static_cast<size_t>(D - c_[i].degree()));
            acc = acc + rev * op[i][j];
        }
        out[j] = acc;
    }
    return FuchsianODE(std::move(out), "t");
}

std::vector<Rat> FuchsianODE::apply_to_series(const std::vector<Rat>& series) const {
    const unsigned n = order();
    if (series.size() <= n) return {};
    const size_t keep = series.size() - n;
    std::vector<Rat> out(keep, Rat(0));
    std::vector<Rat> der = series;
    for (unsigned i = 0; i <= n; ++i) {
        if (!c_[i].is_zero()) {
            const auto& a = c_[i].coeffs();
            for (size_t j = 0; j < a.size(); ++j) {
                if (a[j] == 0) continue;
                for (size_t k = 0; k + j < keep && k < der.size(); ++k)
                    out[k + j] += a[j] * der[k];
            }
        }
        if (i < n) {  // differentiate for the next round
            std::vector<Rat> next(der.size() > 1 ? der.size() - 1 : 0);
            for (size_t k = 1; k < der.size(); ++k) next[k - 1] = Rat(static_cast<long>(k)) * der[k];
            der = std::move(next);
        }
    }
    return out;
}

std::string FuchsianODE::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str(var_) << ")*Dy" << i;
    }
    return os.str();
}

}  // namespace fuchs
