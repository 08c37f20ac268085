#include "fuchs/constants.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace fuchs {
namespace constants {

namespace {

// Bernoulli numbers via the tangent-number triangle; cached.
std::vector<Rat>& bernoulli_cache() {
    static std::vector<Rat> cache{Rat(1), Rat(-1, 2)};
    return cache;
}
std::mutex bernoulli_mutex;

void extend_bernoulli(unsigned n) {
    auto& cache = bernoulli_cache();
    if (n < cache.size()) return;
    // B_m from the recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0
    for (unsigned m = static_cast<unsigned>(cache.size()); m <= n; ++m) {
        if (m % 2 == 1) {
            cache.push_back(Rat(0));
            continue;
        }
        Rat acc(0);
        Int binom(1);  // C(m+1, 0)
        for (unsigned k = 0; k < m; ++k) {
            acc += Rat(binom) * cache[k];
            binom = binom * Int(m + 1 - k) / Int(k + 1);
        }
        cache.push_back(-acc / Rat(binom));  // binom = C(m+1, m)
    }
}

BigFloat zeta3(mpfr_prec_t bits) { return zeta_ui(3, bits); }

}  // namespace

Rat bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli(n);
    return bernoulli_cache()[n];
}

BigFloat clausen2(const BigFloat& theta, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigFloat two_pi = BigFloat(2L, bits) * const_pi(bits);
    // reduce to [0, 2pi)
    BigFloat t = theta + BigFloat(bits);
    BigFloat k = floor(t / two_pi);
    t = t - k * two_pi;
    // odd symmetry: Cl2(2pi - t) = -Cl2(t); keep t <= pi for convergence
    int sign = 1;
    if (t > const_pi(bits)) {
        t = two_pi - t;
        sign = -1;
    }
    if (t.is_zero()) return BigFloat(bits);
    // Cl2(t) = t(1 - ln t) + sum_{k>=1} zeta(2k) t^{2k+1} / (k (2k+1) (2pi)^{2k})
    BigFloat acc = t * (BigFloat(1L, bits) - log(t));
    BigFloat ratio = (t / two_pi) * (t / two_pi);
    BigFloat pw = t * ratio;  // t^{2k+1} / (2pi)^{2k} at k=1
    const BigFloat eps = pow10(-(digits + 10), bits);
    for (unsigned long kk = 1; kk < 100000; ++kk) {
        BigFloat term = zeta_ui(2 * kk, bits) * pw /
                        BigFloat(static_cast<long>(kk * (2 * kk + 1)), bits);
        acc += term;
        if (abs(term) < eps) break;
        pw *= ratio;
    }
    if (sign < 0) acc = -acc;
    return acc;
}

namespace {

// direct series for |z| <= 1/2
BigComplex dilog_series(const BigComplex& z, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigComplex acc(bits), zp = z;
    const BigFloat eps = pow10(-(digits + 10), bits);
    for (long k = 1; k < 1000000; ++k) {
        BigFloat k2 = BigFloat(k, bits) * BigFloat(k, bits);
        BigComplex term = zp / BigComplex(k2, BigFloat(bits));
        acc += term;
        if (abs(term) < eps) break;
        zp *= z;
    }
    return acc;
}

// Li2(e^u) = pi^2/6 + u(1 - log(-u)) + sum_{k>=2} zeta(2-k) u^k / k!
// convergent for |u| < 2pi; zeta(2-k) are rationals from Bernoulli numbers.
BigComplex dilog_expu(const BigComplex& u, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigFloat pi = const_pi(bits);
    BigComplex acc(pi * pi / BigFloat(6L, bits), BigFloat(bits));
    acc += u * (BigComplex(1L, bits) - log(-u));
    // k = 2 term: zeta(0) = -1/2
    BigComplex uk = u * u;
    Int kfact(2);
    acc += BigFloat(Rat(-1, 2), bits) * uk / BigComplex(BigFloat(kfact, bits), BigFloat(bits));
    const BigFloat eps = pow10(-(digits + 10), bits);
    for (unsigned k = 3; k < 100000; ++k) {
        uk *= u;
        kfact *= k;
        // zeta(2-k): nonzero only for k odd (k = 2m+1 -> zeta(1-2m) = -B_{2m}/(2m))
        if (k % 2 == 1) {
            unsigned m = (k - 1) / 2;
            Rat z = -bernoulli(2 * m) / Rat(2 * m);
            BigComplex term = BigFloat(z, bits) * uk / BigComplex(BigFloat(kfact, bits), BigFloat(bits));
            acc += term;
            if (abs(term) < eps && k > 8) break;
        }
    }
    return acc;
}

}  // namespace

BigComplex dilog(const BigComplex& z, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    const BigFloat eps_cut = pow10(-(digits + 5), bits);
    if (z.im.is_zero() || abs(z.im) < eps_cut) {
        if (z.re >= BigFloat(1L, bits) && !(abs(z.re - BigFloat(1L, bits)) < eps_cut))
            throw std::domain_error(
                "dilog: on the cut [1,inf); pass a side hint via a small imaginary part");
    }
    BigFloat az = abs(z);
    const BigFloat half(0.5, bits), two(2L, bits), one(1L, bits);
    if (az <= half) return dilog_series(z, digits);
    if (abs(z - BigComplex(1L, bits)) < pow10(-(digits + 8), bits)) {
        BigFloat pi = const_pi(bits);
        return BigComplex(pi * pi / BigFloat(6L, bits), BigFloat(bits));
    }
    if (az >= two) {
        // inversion: Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
        BigComplex l = log(-z);
        BigFloat pi = const_pi(bits);
        return -BigComplex(pi * pi / BigFloat(6L, bits), BigFloat(bits)) -
               BigFloat(Rat(1, 2), bits) * (l * l) - dilog(BigComplex(1L, bits) / z, digits);
    }
    BigComplex onec(1L, bits);
    BigFloat d1 = abs(onec - z);
    if (d1 <= half) {
        // reflection: Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
        BigFloat pi = const_pi(bits);
        BigComplex lz = log(z), l1z = log(onec - z);
        return BigComplex(pi * pi / BigFloat(6L, bits), BigFloat(bits)) - lz * l1z -
               dilog_series(onec - z, digits);
    }
    // annulus: expansion in u = log z (|u| < 2pi here)
    return dilog_expu(log(z), digits);
}

BigFloat trigamma(const Rat& x, long digits) {
    if (x <= 0) throw std::domain_error("trigamma: argument must be positive");
    const mpfr_prec_t bits = bits_for_digits(digits + 20);
    // shift x up: psi(1,x) = psi(1,x+1) + 1/x^2
    long shift_target = static_cast<long>(0.5 * digits) + 12;
    BigFloat acc(bits);
    Rat xv = x;
    while (xv < shift_target) {
        BigFloat t = BigFloat(xv, bits);
        acc += BigFloat(1L, bits) / (t * t);
        xv += 1;
    }
    // Euler-Maclaurin: psi(1,x) ~ 1/x + 1/(2x^2) + sum B_{2k} / x^{2k+1}
    BigFloat X(xv, bits);
    BigFloat inv = BigFloat(1L, bits) / X;
    BigFloat inv2 = inv * inv;
    acc += inv + BigFloat(Rat(1, 2), bits) * inv2;
    BigFloat pw = inv2 * inv;  // 1/x^3
    const BigFloat eps = pow10(-(digits + 12), bits);
    for (unsigned k = 1; k < 4000; ++k) {
        BigFloat term = BigFloat(bernoulli(2 * k), bits) * pw;
        acc += term;
        if (abs(term) < eps) break;
        pw *= inv2;
    }
    return acc;
}

BigFloat i3_plus(long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigFloat pi = const_pi(bits);
    BigFloat cl = clausen2(pi / BigFloat(3L, bits), digits + 10);
    BigFloat s3 = sqrt(BigFloat(3L, bits));
    return (pi * pi / BigFloat(3L, bits) + BigFloat(2L, bits) - BigFloat(3L, bits) * s3 * cl) /
           (BigFloat(2L, bits) * pi * pi);
}

BigFloat i4_minus(long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigFloat pi = const_pi(bits);
    return (BigFloat(4L, bits) * pi * pi / BigFloat(9L, bits) - BigFloat(Rat(1, 6), bits) -
            BigFloat(Rat(7, 2), bits) * zeta3(bits)) /
           (BigFloat(16L, bits) * pi * pi * pi);
}

std::vector<std::string> known_names() {
    return {"pi",         "sqrt3",   "log2",    "zeta3",
            "catalan",    "euler_gamma", "I3plus", "I4minus",
            "clausen_pi_over_3"};
}

BigComplex eval_constant(const std::string& name, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    BigFloat re(bits);
    if (name == "pi") re = const_pi(bits);
    else if (name == "sqrt3") re = sqrt(BigFloat(3L, bits));
    else if (name == "log2") re = const_log2(bits);
    else if (name == "zeta3") re = zeta3(bits);
    else if (name == "catalan") re = const_catalan(bits);
    else if (name == "euler_gamma") re = const_euler(bits);
    else if (name == "I3plus") re = i3_plus(digits);
    else if (name == "I4minus") re = i4_minus(digits);
    else if (name == "clausen_pi_over_3")
        re = clausen2(const_pi(bits) / BigFloat(3L, bits), digits);
    else
        throw std::invalid_argument("eval_constant: unknown name: " + name);
    return BigComplex(re, BigFloat(bits));
}

CrosscheckReport i3_crosscheck(long digits) {
    if (digits < 50) throw std::invalid_argument("i3_crosscheck: need P >= 50");
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    BigFloat pi = const_pi(bits);
    BigFloat s3 = sqrt(BigFloat(3L, bits));
    BigFloat base = BigFloat(Rat(1, 6), bits) + BigFloat(1L, bits) / (pi * pi);

    BigFloat clausen_form = i3_plus(digits);

    // dilog form; the classical statement is written for Maple's
    // dilog(x) = Li2(1-x), which conjugates the argument relative to Li2,
    // so the sign comes out through Im Li2(1/2 - i sqrt3/2) = -Cl2(pi/3).
    BigComplex zarg(BigFloat(Rat(1, 2), bits), -s3 / BigFloat(2L, bits));
    BigComplex li = dilog(zarg, digits + 5);
    BigFloat dilog_form =
        base + BigFloat(3L, bits) * s3 / (BigFloat(2L, bits) * pi * pi) * li.im;

    // polygamma form
    BigFloat pg = trigamma(Rat(2, 3), digits + 5) + trigamma(Rat(5, 6), digits + 5) -
                  trigamma(Rat(1, 6), digits + 5) - trigamma(Rat(1, 3), digits + 5);
    BigFloat polygamma_form = base + pg / (BigFloat(16L, bits) * pi * pi);

    CrosscheckReport rep;
    rep.residuals.push_back({"clausen", "dilog", abs(clausen_form - dilog_form)});
    rep.residuals.push_back({"clausen", "polygamma", abs(clausen_form - polygamma_form)});
    rep.residuals.push_back({"dilog", "polygamma", abs(dilog_form - polygamma_form)});

    static const char* kWuDigits =
        "0.000814462565662504439391217128562721997861158118508";
    BigFloat wu = BigFloat::parse(kWuDigits, 60);
    rep.wu_reference_match = abs(clausen_form - wu) < pow10(-51, bits);
    return rep;
}

}  // namespace constants
}  // namespace fuchs
