#include "fuchs/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuchs {

namespace {

BigComplex eval_with_deriv(const std::vector<BigComplex>& c, const BigComplex& z,
                           BigComplex& deriv) {
    mpfr_prec_t bits = z.prec();
    BigComplex p(bits), d(bits);
    for (size_t i = c.size(); i-- > 0;) {
        d = d * z + p;
        p = p * z + c[i];
    }
    deriv = d;
    return p;
}

}  // namespace

std::vector<BigComplex> complex_roots_of(const std::vector<BigComplex>& coeffs, long digits) {
    size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
    if (deg == 0) return {};
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    const size_t n = deg;
    std::vector<BigComplex> c(coeffs.size(), BigComplex(bits));
    for (size_t i = 0; i < coeffs.size(); ++i)
        c[i] = coeffs[i] + BigComplex(bits);  // bump to working precision

    // Cauchy-style radius: 1 + max |c_i / c_n|
    BigFloat radius(1L, bits);
    for (size_t i = 0; i < n; ++i) {
        BigFloat t = abs(c[i] / c[n]) + BigFloat(1L, bits);
        if (t > radius) radius = t;
    }

    // initial guesses on a slightly irrational spiral to break symmetry
    std::vector<BigComplex> z(n, BigComplex(bits));
    BigFloat two_pi = BigFloat(2L, bits) * const_pi(bits);
    for (size_t i = 0; i < n; ++i) {
        BigFloat theta = two_pi * BigFloat(Rat(static_cast<long>(4 * i + 1),
                                               static_cast<long>(4 * n)), bits)
                         + BigFloat(0.3779 + 0.011 * static_cast<double>(i), bits);
        BigFloat r = radius * BigFloat(0.5 + 0.3 * ((i % 3) + 1) / 3.0, bits);
        z[i] = BigComplex(r * cos(theta), r * sin(theta));
    }

    const BigFloat tol = pow10(-(digits + 5), bits) * radius;
    for (int iter = 0; iter < 600; ++iter) {
        BigFloat maxstep(bits);
        for (size_t i = 0; i < n; ++i) {
            BigComplex d(bits);
            BigComplex p = eval_with_deriv(c, z[i], d);
            if (abs(p).is_zero()) continue;
            if (d.is_zero()) {  // nudge off a critical point
                z[i].re += tol + BigFloat(1e-3, bits);
                continue;
            }
            BigComplex newton = p / d;
            BigComplex sum(bits);
            for (size_t j = 0; j < n; ++j)
                if (j != i) sum += BigComplex(1L, bits) / (z[i] - z[j]);
            BigComplex denom = BigComplex(1L, bits) - newton * sum;
            BigComplex step = denom.is_zero() ? newton : newton / denom;
            z[i] -= step;
            BigFloat s = abs(step);
            if (s > maxstep) maxstep = s;
        }
        if (maxstep < tol) break;
    }
    return z;
}

std::vector<BigComplex> complex_roots(const Poly& f, long digits) {
    const long deg = f.degree();
    if (deg <= 0) return {};
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    std::vector<BigComplex> c;
    c.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) c.emplace_back(q, bits);
    return complex_roots_of(c, digits);
}

std::optional<Rat> rational_candidate(const BigFloat& x, const Int& max_den) {
    // continued-fraction expansion of x; (h0,k0) and (h1,k1) are the two
    // previous convergents p_{n-2}/q_{n-2}, p_{n-1}/q_{n-1}
    BigFloat cur = x;
    Int h0(0), h1(1), k0(1), k1(0);
    const BigFloat eps = pow10(-(x.digits() - 8), x.prec());
    for (int it = 0; it < 300; ++it) {
        BigFloat fl = floor(cur);
        Int a = round_to_int(fl);
        Int h = a * h1 + h0, k = a * k1 + k0;
        if (k > max_den) break;
        h0 = h1; h1 = h;
        k0 = k1; k1 = k;
        BigFloat frac = cur - fl;
        BigFloat approx = BigFloat(Rat(h, k), x.prec());
        if (abs(x - approx) < eps) {
            Rat q(h, k);
            q.canonicalize();
            return q;
        }
        if (frac < eps) break;
        cur = BigFloat(1L, x.prec()) / frac;
    }
    return std::nullopt;
}

std::vector<std::pair<Rat, unsigned>> rational_roots(const Poly& f) {
    std::vector<std::pair<Rat, unsigned>> out;
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    Poly work = f;
    // factor out a root at zero first
    long val = work.valuation();
    if (val > 0) {
        std::vector<Rat> c(work.coeffs().begin() + val, work.coeffs().end());
        work = Poly(std::move(c));
        out.push_back({Rat(0), static_cast<unsigned>(val)});
    }
    if (work.degree() < 1) return out;
    Poly sf = work.primitive().squarefree_part().primitive();
    Int lead = Int(sf.leading().get_num());
    const long digits = std::max<long>(60, sf.degree() * 6);
    for (const BigComplex& r : complex_roots(sf, digits)) {
        if (abs(r.im) > pow10(-20, r.prec())) continue;
        auto cand = rational_candidate(r.re, lead * lead * 1000000 + 1000000);
        if (!cand) continue;
        if (work.eval(*cand) != 0) continue;
        // multiplicity by exact deflation
        unsigned mult = 0;
        Poly lin{Rat(-cand->get_num()), Rat(cand->get_den())};
        while (true) {
            auto [q, rem] = Poly::divmod(work, lin);
            if (!rem.is_zero()) break;
            work = q;
            ++mult;
        }
        if (mult > 0) out.push_back({*cand, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<IntegerFactor> factor_squarefree(const Poly& f, unsigned max_subset_degree) {
    std::vector<IntegerFactor> out;
    Poly rem = f.primitive();
    if (rem.degree() < 1) return out;
    if (rem.degree() == 1) {
        out.push_back({rem, complex_roots(rem, 40)});
        return out;
    }
    const long digits = std::max<long>(60, rem.degree() * 8);
    std::vector<BigComplex> roots = complex_roots(rem, digits);

    auto try_subset = [&](const std::vector<size_t>& idx) -> std::optional<Poly> {
        mpfr_prec_t bits = roots[0].prec();
        std::vector<BigComplex> cs{BigComplex(1L, bits)};
        for (size_t i : idx) {
            std::vector<BigComplex> next(cs.size() + 1, BigComplex(bits));
            for (size_t k = 0; k < cs.size(); ++k) {
                next[k + 1] += cs[k];
                next[k] -= roots[i] * cs[k];
            }
            cs = std::move(next);
        }
        // lc(rem) * prod(x - r_i) should round to an integer polynomial
        BigFloat lc(Rat(rem.leading()), bits);
        std::vector<Rat> ic(cs.size());
        const BigFloat quarter(0.25, bits);
        for (size_t k = 0; k < cs.size(); ++k) {
            BigComplex v = lc * cs[k];
            if (abs(v.im) > quarter) return std::nullopt;
            BigFloat r = round(v.re);
            if (abs(v.re - r) > quarter) return std::nullopt;
            ic[k] = Rat(round_to_int(v.re));
        }
        Poly cand = Poly(std::move(ic)).primitive();
        if (cand.degree() != static_cast<long>(idx.size())) return std::nullopt;
        auto [q, r] = Poly::divmod(rem, cand);
        if (!r.is_zero()) return std::nullopt;
        return cand;
    };

    std::vector<size_t> alive(roots.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    while (!alive.empty()) {
        if (rem.degree() > static_cast<long>(max_subset_degree)) {
            // too big to cluster; return the remainder as one flagged block
            std::vector<BigComplex> rs;
            for (size_t i : alive) rs.push_back(roots[i]);
            out.push_back({rem, std::move(rs)});
            break;
        }
        bool found = false;
        for (size_t sz = 1; sz <= alive.size() && !found; ++sz) {
            std::vector<size_t> comb(sz);
            for (size_t i = 0; i < sz; ++i) comb[i] = i;
            while (true) {
                std::vector<size_t> idx(sz);
                for (size_t i = 0; i < sz; ++i) idx[i] = alive[comb[i]];
                if (auto cand = try_subset(idx)) {
                    std::vector<BigComplex> rs;
                    for (size_t i : idx) rs.push_back(roots[i]);
                    out.push_back({*cand, std::move(rs)});
                    rem = Poly::div_exact(rem, *cand).primitive();
                    std::vector<size_t> next_alive;
                    for (size_t i : alive)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            next_alive.push_back(i);
                    alive = std::move(next_alive);
                    found = true;
                    break;
                }
                long adv = static_cast<long>(sz) - 1;
                while (adv >= 0 && comb[adv] == alive.size() - sz + adv) --adv;
                if (adv < 0) break;
                ++comb[adv];
                for (size_t j = adv + 1; j < sz; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        if (!found) {
            // numerical trouble; emit remainder as a single block
            std::vector<BigComplex> rs;
            for (size_t i : alive) rs.push_back(roots[i]);
            out.push_back({rem, std::move(rs)});
            break;
        }
    }
    return out;
}

}  // namespace fuchs
