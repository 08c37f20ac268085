#include "fuchs/singular.hpp"

#include "fuchs/transport.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fuchs {

namespace {

// ---------------------------------------------------------------------
// Arithmetic in Q[x]/(m). Elements are Polys of degree < deg m. A linear
// minimal polynomial makes this plain rational arithmetic, so the same
// code serves rational points (m = x - p) and algebraic ones.
// ---------------------------------------------------------------------
class NumberField {
public:
    explicit NumberField(const Poly& min_poly) : m_(min_poly.monic()) {
        if (m_.degree() < 1) throw std::invalid_argument("NumberField: constant modulus");
    }

    long degree() const { return m_.degree(); }
    Poly reduce(const Poly& p) const { return Poly::divmod(p, m_).second; }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly inv(const Poly& a) const {
        // extended Euclid: u*a + v*m = g
        Poly r0 = m_, r1 = reduce(a);
        if (r1.is_zero()) throw std::domain_error("NumberField: inverse of zero");
        Poly u0, u1{Rat(1)};
        while (!r1.is_zero()) {
            auto [q, r2] = Poly::divmod(r0, r1);
            Poly u2 = u0 - q * u1;
            r0 = r1; r1 = r2;
            u0 = u1; u1 = u2;
        }
        if (r0.degree() != 0)
            throw std::domain_error("NumberField: zero divisor (modulus not irreducible)");
        return reduce(Rat(1) / r0.coeff(0) * u0);
    }
    /// theta as an element
    Poly generator() const { return Poly{Rat(0), Rat(1)}; }
    BigComplex embed(const Poly& a, const BigComplex& theta) const { return a.eval(theta); }

private:
    Poly m_;
};

using NFElem = Poly;
// polynomial in s with number-field coefficients
using NFSPoly = std::vector<NFElem>;

void nfs_trim(NFSPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

NFElem nfs_eval(const NumberField& F, const NFSPoly& p, const Rat& s) {
    NFElem acc;
    for (size_t i = p.size(); i-- > 0;) acc = F.reduce(Rat(s) * acc + p[i]);
    return acc;
}

// synthetic division of p by (s - r); remainder must be checked by caller
NFSPoly nfs_deflate(const NumberField& F, const NFSPoly& p, const Rat& r) {
    NFSPoly q(p.size() - 1);
    NFElem carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = F.reduce(p[i] + Rat(r) * carry);
    }
    return q;
}

// Taylor shift by theta with number-field arithmetic: b(x) = a(x + theta).
std::vector<NFElem> nf_shift(const NumberField& F, const Poly& a, const NFElem& theta) {
    std::vector<NFElem> work;
    for (const Rat& c : a.coeffs()) work.push_back(Poly::constant(c));
    if (work.empty()) return work;
    std::vector<NFElem> out(work.size());
    for (size_t k = 0; k < work.size(); ++k) {
        for (size_t i = work.size() - 1; i > k; --i)
            work[i - 1] = F.reduce(work[i - 1] + F.mul(theta, work[i]));
        out[k] = work[k];
    }
    return out;
}

struct NFLocalData {
    long mu = 0;
    std::vector<NFSPoly> g;  // g_d(s) over the field
};

// The expansion L(x^s) = sum_d g_d(s) x^{s + mu + d} for the operator with
// coefficients b_i already recentered at the point.
NFLocalData nf_local_expansion(const NumberField& F,
                               const std::vector<std::vector<NFElem>>& b) {
    const size_t n = b.size() - 1;
    long mu = 0;
    bool have = false;
    for (size_t i = 0; i <= n; ++i)
        for (size_t m = 0; m < b[i].size(); ++m) {
            if (b[i][m].is_zero()) continue;
            long v = static_cast<long>(m) - static_cast<long>(i);
            if (!have || v < mu) { mu = v; have = true; }
        }
    if (!have) throw std::invalid_argument("nf_local_expansion: zero operator");
    long dmax = 0;
    for (size_t i = 0; i <= n; ++i)
        for (size_t m = 0; m < b[i].size(); ++m)
            if (!b[i][m].is_zero())
                dmax = std::max(dmax, static_cast<long>(m) - static_cast<long>(i) - mu);

    NFLocalData out;
    out.mu = mu;
    out.g.assign(dmax + 1, {});
    for (size_t i = 0; i <= n; ++i) {
        Poly ff = falling_factorial(static_cast<unsigned>(i));
        for (long d = 0; d <= dmax; ++d) {
            long m = d + mu + static_cast<long>(i);
            if (m < 0 || m >= static_cast<long>(b[i].size())) continue;
            const NFElem& c = b[i][m];
            if (c.is_zero()) continue;
            NFSPoly& gd = out.g[d];
            if (gd.size() < ff.coeffs().size()) gd.resize(ff.coeffs().size());
            for (size_t k = 0; k < ff.coeffs().size(); ++k)
                gd[k] = F.reduce(gd[k] + ff.coeff(k) * c);
        }
    }
    for (auto& gd : out.g) nfs_trim(gd);
    return out;
}

std::vector<std::vector<NFElem>> recenter(const NumberField& F, const FuchsianODE& ode,
                                          const NFElem& theta) {
    std::vector<std::vector<NFElem>> b;
    b.reserve(ode.order() + 1);
    for (const Poly& a : ode.coeffs()) b.push_back(nf_shift(F, a, theta));
    return b;
}

struct IndicialNF {
    NFSPoly g0;
    bool regular;
};

IndicialNF nf_indicial(const NumberField& F, const FuchsianODE& ode, const NFElem& theta) {
    auto data = nf_local_expansion(F, recenter(F, ode, theta));
    bool reg = data.g[0].size() == ode.order() + 1;
    return {data.g[0], reg};
}

ExponentSet exponents_from_g0(const NumberField& F, const NFSPoly& g0_in,
                              const BigComplex& theta_numeric, long digits) {
    ExponentSet out;
    NFSPoly g0 = g0_in;
    if (F.degree() == 1) {
        // rational coefficients: exact root extraction with multiplicities
        std::vector<Rat> q;
        for (const auto& c : g0) q.push_back(c.coeff(0));
        Poly gq(std::move(q));
        out.rational = rational_roots(gq);
        Poly rest = gq;
        for (const auto& [r, mult] : out.rational)
            for (unsigned t = 0; t < mult; ++t)
                rest = Poly::div_exact(rest, Poly{Rat(-r.get_num()), Rat(r.get_den())});
        if (rest.degree() > 0) out.irrational = complex_roots(rest, digits);
        return out;
    }
    // exact rational roots: numeric candidates verified in the field
    const mpfr_prec_t bits = bits_for_digits(std::max(digits, 50L) + 10);
    for (bool progress = true; progress && g0.size() > 1;) {
        progress = false;
        std::vector<BigComplex> nc;
        for (const auto& c : g0) nc.push_back(F.embed(c, theta_numeric));
        std::vector<BigComplex> roots = complex_roots_of(nc, digits);
        for (const BigComplex& r : roots) {
            if (abs(r.im) > pow10(-(digits / 2), bits)) continue;
            auto cand = rational_candidate(r.re, Int(1000000));
            if (!cand) continue;
            if (!nfs_eval(F, g0, *cand).is_zero()) continue;
            unsigned mult = 0;
            while (g0.size() > 1 && nfs_eval(F, g0, *cand).is_zero()) {
                g0 = nfs_deflate(F, g0, *cand);
                nfs_trim(g0);
                ++mult;
            }
            if (mult) {
                out.rational.push_back({*cand, mult});
                progress = true;
                break;  // restart with deflated polynomial
            }
        }
    }
    std::sort(out.rational.begin(), out.rational.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // whatever is left is irrational: report numeric roots
    if (g0.size() > 1) {
        std::vector<BigComplex> nc;
        for (const auto& c : g0) nc.push_back(F.embed(c, theta_numeric));
        out.irrational = complex_roots_of(nc, digits);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------

SingularPoint SingularPoint::rational(Rat v) {
    SingularPoint p;
    p.kind_ = Kind::Rational;
    v.canonicalize();
    p.rat_ = v;
    return p;
}

SingularPoint SingularPoint::algebraic(AlgebraicPointData a, bool exact_arith) {
    SingularPoint p;
    p.kind_ = Kind::Algebraic;
    p.alg_ = std::move(a);
    p.exact_ = exact_arith;
    return p;
}

SingularPoint SingularPoint::infinity() {
    SingularPoint p;
    p.kind_ = Kind::Infinity;
    return p;
}

BigComplex SingularPoint::location(long digits) const {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    switch (kind_) {
        case Kind::Rational:
            return BigComplex(rat_, bits);
        case Kind::Infinity:
            throw std::domain_error("SingularPoint: infinity has no finite location");
        case Kind::Algebraic: {
            // Newton refinement of the stored 30-digit enclosure
            BigComplex z(BigFloat::parse(alg_.enclosure.re.str(28), digits + 10),
                         BigFloat::parse(alg_.enclosure.im.str(28), digits + 10));
            Poly d = alg_.min_poly.derivative();
            for (int it = 0; it < 200; ++it) {
                BigComplex f = alg_.min_poly.eval(z);
                if (f.is_zero()) break;
                BigComplex step = f / d.eval(z);
                z -= step;
                if (abs(step) < pow10(-(digits + 5), bits)) break;
            }
            return z;
        }
    }
    throw std::logic_error("SingularPoint: bad kind");
}

std::string SingularPoint::str() const {
    switch (kind_) {
        case Kind::Rational:
            return rat_.get_str();
        case Kind::Infinity:
            return "inf";
        case Kind::Algebraic: {
            std::ostringstream os;
            os << "root of " << alg_.min_poly.str("w") << " near " << alg_.enclosure.str(12);
            return os.str();
        }
    }
    return "?";
}

Rat ExponentSet::exponent_sum() const {
    if (indicial.is_zero())
        throw std::logic_error("ExponentSet: exact indicial polynomial unavailable");
    long n = indicial.degree();
    if (n < 1) return Rat(0);
    return -indicial.coeff(n - 1) / indicial.coeff(n);
}

std::vector<SingularPoint> singular_points(const FuchsianODE& ode) {
    std::vector<SingularPoint> out;
    const Poly& lead = ode.leading();

    auto rr = rational_roots(lead);
    for (const auto& [r, mult] : rr) out.push_back(SingularPoint::rational(r));

    // divide out rational linear factors, then factor what is left
    Poly rest = lead.primitive().squarefree_part().primitive();
    for (const auto& [r, mult] : rr) {
        Poly lin{Rat(-r.get_num()), Rat(r.get_den())};
        rest = Poly::div_exact(rest, lin).primitive();
    }
    std::vector<SingularPoint> alg;
    if (rest.degree() >= 1) {
        for (auto& fac : factor_squarefree(rest)) {
            const bool exact = fac.factor.degree() <= 8;
            for (auto& root : fac.roots)
                alg.push_back(SingularPoint::algebraic({fac.factor, root}, exact));
        }
    }
    std::sort(alg.begin(), alg.end(), [](const SingularPoint& a, const SingularPoint& b) {
        const Poly &pa = a.alg().min_poly, &pb = b.alg().min_poly;
        if (pa.degree() != pb.degree()) return pa.degree() < pb.degree();
        if (!(pa == pb)) return pa.coeffs() < pb.coeffs();
        if (a.alg().enclosure.re != b.alg().enclosure.re)
            return a.alg().enclosure.re < b.alg().enclosure.re;
        return a.alg().enclosure.im < b.alg().enclosure.im;
    });
    out.insert(out.end(), alg.begin(), alg.end());
    out.push_back(SingularPoint::infinity());
    return out;
}

ExponentSet indicial_exponents(const FuchsianODE& ode, const Rat& p, long digits) {
    NumberField F(Poly{-p, Rat(1)});  // x - p
    auto ind = nf_indicial(F, ode, Poly::constant(p));
    if (!ind.regular) throw std::domain_error("irregular singular point");
    ExponentSet out = exponents_from_g0(F, ind.g0, BigComplex(p, bits_for_digits(digits + 10)), digits);
    std::vector<Rat> q;
    for (const auto& c : ind.g0) q.push_back(c.coeff(0));
    out.indicial = Poly(std::move(q));
    return out;
}

ExponentSet indicial_exponents_at_infinity(const FuchsianODE& ode, long digits) {
    return indicial_exponents(ode.at_infinity(), Rat(0), digits);
}

ExponentSet indicial_exponents(const FuchsianODE& ode, const SingularPoint& p, long digits) {
    switch (p.kind()) {
        case SingularPoint::Kind::Rational:
            return indicial_exponents(ode, p.rat(), digits);
        case SingularPoint::Kind::Infinity:
            return indicial_exponents_at_infinity(ode, digits);
        case SingularPoint::Kind::Algebraic: {
            if (!p.exact_exponent_arithmetic())
                throw std::domain_error("no exact exponent arithmetic at this point");
            NumberField F(p.alg().min_poly);
            auto ind = nf_indicial(F, ode, F.generator());
            if (!ind.regular) throw std::domain_error("irregular singular point");
            return exponents_from_g0(F, ind.g0, p.location(digits + 20), digits);
        }
    }
    throw std::logic_error("indicial_exponents: bad kind");
}

FuchsReport is_fuchsian(const FuchsianODE& ode) {
    FuchsReport rep;
    for (const SingularPoint& p : singular_points(ode)) {
        bool regular = true;
        try {
            if (p.kind() == SingularPoint::Kind::Algebraic && !p.exact_exponent_arithmetic()) {
                // fall back to a numeric degree test on the embedded indicial
                NumberField F(p.alg().min_poly);
                auto ind = nf_indicial(F, ode, F.generator());
                regular = ind.regular;
            } else {
                indicial_exponents(ode, p, 30);
            }
        } catch (const std::domain_error&) {
            regular = false;
        }
        if (!regular) {
            rep.fuchsian = false;
            rep.offending.push_back(p);
        }
    }
    return rep;
}

namespace {

// No-log Frobenius test: with distinct integer exponents, run the plain
// power-series recurrence from each exponent and check every resonance
// obstruction vanishes. Exact in the field.
bool apparent_scalar_test(const NumberField& F, const NFLocalData& data,
                          const std::vector<std::pair<Rat, unsigned>>& expos, long T) {
    std::vector<long> roots;
    for (const auto& [r, mult] : expos) {
        if (mult != 1) return false;
        if (r.get_den() != 1 || r < 0) return false;
        roots.push_back(static_cast<long>(r.get_num().get_si()));
    }
    std::sort(roots.begin(), roots.end());
    const long maxgap = roots.back() - roots.front();
    if (T < 0) T = maxgap + 10;
    if (T < maxgap) throw std::invalid_argument("increase T");

    const long D = static_cast<long>(data.g.size()) - 1;
    auto g_at = [&](long d, long s) { return nfs_eval(F, data.g[d], Rat(s)); };

    for (long rho : roots) {
        std::vector<NFElem> c(T + 1);
        c[0] = Poly{Rat(1)};
        for (long m = 1; m <= T; ++m) {
            NFElem rhs;
            for (long d = 1; d <= std::min<long>(D, m); ++d)
                rhs = F.reduce(rhs + F.mul(g_at(d, rho + m - d), c[m - d]));
            rhs = -rhs;
            NFElem g0 = g_at(0, rho + m);
            if (g0.is_zero()) {
                // resonance with a larger exponent: obstruction must vanish
                if (!rhs.is_zero()) return false;
                c[m] = NFElem{};  // pick the solution with zero resonant head
            } else {
                c[m] = F.mul(rhs, F.inv(g0));
            }
        }
    }
    return true;
}

}  // namespace

bool is_apparent(const FuchsianODE& ode, const Rat& p, long T) {
    NumberField F(Poly{-p, Rat(1)});
    auto b = recenter(F, ode, Poly::constant(p));
    auto data = nf_local_expansion(F, b);
    if (data.g[0].size() != ode.order() + 1) return false;  // irregular: not apparent
    auto expos = exponents_from_g0(F, data.g[0], BigComplex(p, bits_for_digits(50)), 40);
    if (!expos.irrational.empty()) return false;
    unsigned total = 0;
    for (const auto& [r, m] : expos.rational) total += m;
    if (total != ode.order()) return false;
    return apparent_scalar_test(F, data, expos.rational, T);
}

bool is_apparent(const FuchsianODE& ode, const SingularPoint& p, long T) {
    switch (p.kind()) {
        case SingularPoint::Kind::Rational:
            return is_apparent(ode, p.rat(), T);
        case SingularPoint::Kind::Infinity: {
            FuchsianODE inf = ode.at_infinity();
            return is_apparent(inf, Rat(0), T);
        }
        case SingularPoint::Kind::Algebraic: {
            if (!p.exact_exponent_arithmetic())
                throw std::domain_error("no exact exponent arithmetic at this point");
            NumberField F(p.alg().min_poly);
            auto b = recenter(F, ode, F.generator());
            auto data = nf_local_expansion(F, b);
            if (data.g[0].size() != ode.order() + 1) return false;
            auto expos = exponents_from_g0(F, data.g[0], p.location(60), 40);
            if (!expos.irrational.empty()) return false;
            unsigned total = 0;
            for (const auto& [r, m] : expos.rational) total += m;
            if (total != ode.order()) return false;
            return apparent_scalar_test(F, data, expos.rational, T);
        }
    }
    throw std::logic_error("is_apparent: bad kind");
}

BigFloat wronskian_logderiv_check(const FuchsianODE& ode,
                                  const std::vector<BigComplex>& samples,
                                  long digits) {
    const unsigned n = ode.order();
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigFloat worst(bits);
    for (const BigComplex& z0 : samples) {
        BigFloat dist = distance_to_singularities(ode, z0, 40);
        if (dist < pow10(-3, bits) * nearest_singularity_scale(ode, 40))
            throw std::domain_error("sample too close to a singular point");
        NumericTaylor taylor(ode, z0, digits);
        long T = taylor.terms_for(BigFloat(0.1, bits) * dist, digits + 10);
        // fundamental system with identity jets
        std::vector<std::vector<BigComplex>> coef;
        for (unsigned j = 0; j < n; ++j) {
            std::vector<BigComplex> jet(n, BigComplex(bits));
            jet[j] = BigComplex(1L, bits);
            coef.push_back(taylor.coefficients(jet, T));
        }
        BigComplex x(BigFloat(0.1, bits) * dist, BigFloat(bits));
        BigComplex z1 = z0 + x;
        // W' of a Wronskian replaces the last derivative row with order n
        CMatrix W(n, n, bits), Wprime(n, n, bits);
        for (unsigned j = 0; j < n; ++j) {
            auto jets = NumericTaylor::eval_derivs(coef[j], x, n);
            for (unsigned i = 0; i < n; ++i) {
                W.at(i, j) = jets[i];
                Wprime.at(i, j) = (i + 1 == n) ? jets[n] : jets[i];
            }
        }
        BigComplex w = W.determinant();
        BigComplex wp = Wprime.determinant();
        BigComplex expected = -ode.coeff(n - 1).eval(z1) / ode.leading().eval(z1);
        BigFloat resid = abs(wp / w - expected);
        if (resid > worst) worst = resid;
    }
    return worst;
}

}  // namespace fuchs
