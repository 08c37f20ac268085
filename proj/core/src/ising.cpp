#include "fuchs/ising.hpp"

#include "fuchs/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace fuchs {
namespace ising {

namespace {
constexpr int kBias = 512;
constexpr int64_t kStride = 1024;

// componentwise sum of two biased-encoded multi-indices
int64_t add_keys(unsigned angles, int64_t k1, int64_t k2) {
    int64_t key = 0;
    std::vector<int64_t> parts(angles);
    for (unsigned t = 0; t < angles; ++t) {
        parts[angles - 1 - t] = (k1 % kStride - kBias) + (k2 % kStride - kBias);
        k1 /= kStride;
        k2 /= kStride;
    }
    for (unsigned t = 0; t < angles; ++t) {
        if (parts[t] <= -kBias || parts[t] >= kBias)
            throw std::overflow_error("TrigSeries: Fourier support overflow");
        key = key * kStride + (parts[t] + kBias);
    }
    return key;
}

}  // namespace

TrigSeries::TrigSeries(unsigned angles, long T) : angles_(angles), T_(T), c_(T + 1) {
    if (T < 0) throw std::invalid_argument("TrigSeries: negative truncation");
}

int64_t TrigSeries::encode(const std::vector<int>& m) const {
    if (m.size() != angles_) throw std::invalid_argument("TrigSeries: index arity mismatch");
    int64_t key = 0;
    for (unsigned i = 0; i < angles_; ++i) {
        if (m[i] <= -kBias || m[i] >= kBias)
            throw std::overflow_error("TrigSeries: Fourier support overflow");
        key = key * kStride + (m[i] + kBias);
    }
    return key;
}

TrigSeries TrigSeries::one(unsigned angles, long T) {
    TrigSeries s(angles, T);
    s.c_[0][s.encode(std::vector<int>(angles, 0))] = Rat(1);
    return s;
}

TrigSeries TrigSeries::mode(unsigned angles, long T, const std::vector<int>& m, long k,
                            const Rat& c) {
    TrigSeries s(angles, T);
    if (k <= T && c != 0) s.c_[k][s.encode(m)] = c;
    return s;
}

Rat TrigSeries::coeff(long k, const std::vector<int>& m) const {
    if (k < 0 || k > T_) return Rat(0);
    auto it = c_[k].find(encode(m));
    return it == c_[k].end() ? Rat(0) : it->second;
}

Rat TrigSeries::constant_mode(long k) const {
    return coeff(k, std::vector<int>(angles_, 0));
}

TrigSeries operator+(const TrigSeries& a, const TrigSeries& b) {
    if (a.angles_ != b.angles_ || a.T_ != b.T_)
        throw std::invalid_argument("TrigSeries: shape mismatch");
    TrigSeries r = a;
    for (long k = 0; k <= r.T_; ++k)
        for (const auto& [key, v] : b.c_[k]) {
            Rat& slot = r.c_[k][key];
            slot += v;
            if (slot == 0) r.c_[k].erase(key);
        }
    return r;
}

TrigSeries operator-(const TrigSeries& a, const TrigSeries& b) { return a + b.scaled(Rat(-1)); }

TrigSeries operator*(const TrigSeries& a, const TrigSeries& b) {
    if (a.angles_ != b.angles_ || a.T_ != b.T_)
        throw std::invalid_argument("TrigSeries: shape mismatch");
    TrigSeries r(a.angles_, a.T_);
    for (long i = 0; i <= a.T_; ++i) {
        if (a.c_[i].empty()) continue;
        for (long j = 0; i + j <= a.T_; ++j) {
            if (b.c_[j].empty()) continue;
            auto& tgt = r.c_[i + j];
            for (const auto& [k1, v1] : a.c_[i])
                for (const auto& [k2, v2] : b.c_[j]) {
                    int64_t key = add_keys(a.angles_, k1, k2);
                    Rat& slot = tgt[key];
                    slot += v1 * v2;
                    if (slot == 0) tgt.erase(key);
                }
        }
    }
    return r;
}

TrigSeries TrigSeries::scaled(const Rat& c) const {
    TrigSeries r(angles_, T_);
    if (c == 0) return r;
    for (long k = 0; k <= T_; ++k)
        for (const auto& [key, v] : c_[k]) r.c_[k][key] = c * v;
    return r;
}

TrigSeries TrigSeries::shifted(long k) const {
    TrigSeries r(angles_, T_);
    for (long i = 0; i + k <= T_; ++i) r.c_[i + k] = c_[i];
    return r;
}

bool TrigSeries::is_real_symmetric() const {
    for (long k = 0; k <= T_; ++k)
        for (const auto& [key, v] : c_[k]) {
            // negate the multi-index
            int64_t x = key, nkey = 0;
            std::vector<int64_t> parts(angles_);
            for (unsigned t = 0; t < angles_; ++t) {
                parts[angles_ - 1 - t] = -(x % kStride - kBias);
                x /= kStride;
            }
            for (unsigned t = 0; t < angles_; ++t) nkey = nkey * kStride + (parts[t] + kBias);
            auto it = c_[k].find(nkey);
            if (it == c_[k].end() || !(it->second == v)) return false;
        }
    return true;
}

TrigSeries TrigSeries::solve_one_minus(const TrigSeries& g, const TrigSeries& rhs) {
    if (!g.c_[0].empty())
        throw std::invalid_argument("TrigSeries::solve_one_minus: g must vanish at w^0");
    TrigSeries z(rhs.angles_, rhs.T_);
    for (long k = 0; k <= rhs.T_; ++k) {
        std::map<int64_t, Rat> acc = rhs.c_[k];
        for (long i = 1; i <= k; ++i) {
            if (g.c_[i].empty() || z.c_[k - i].empty()) continue;
            for (const auto& [k1, v1] : g.c_[i])
                for (const auto& [k2, v2] : z.c_[k - i]) {
                    int64_t key = add_keys(g.angles_, k1, k2);
                    Rat& slot = acc[key];
                    slot += v1 * v2;
                    if (slot == 0) acc.erase(key);
                }
        }
        z.c_[k] = std::move(acc);
    }
    return z;
}

TrigSeries TrigSeries::inv_sqrt(const TrigSeries& A) {
    TrigSeries v = one(A.angles_, A.T_);
    const Rat half(1, 2);
    long rounds = 2;
    for (long t = A.T_; t > 0; t >>= 1) ++rounds;
    for (long it = 0; it < rounds; ++it) {
        TrigSeries err = one(A.angles_, A.T_) - v * v * A;
        v = v + (v * err).scaled(half);
    }
    return v;
}

// ---------------------------------------------------------------------

std::vector<NickelPoint> nickel_singularities(unsigned n, long digits) {
    if (n < 1) throw std::invalid_argument("nickel_singularities: n >= 1");
    const long Nmod = 2 * static_cast<long>(n) + 1;
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    const BigFloat two_pi = BigFloat(2L, bits) * const_pi(bits);

    std::vector<NickelPoint> out;
    const BigFloat close = pow10(-(digits - 10), bits);
    for (int m = -static_cast<int>(n); m <= static_cast<int>(n); ++m)
        for (int k = -static_cast<int>(n); k <= static_cast<int>(n); ++k) {
            if (m == 0 && k == 0) continue;
            BigFloat sigma = cos(two_pi * BigFloat(static_cast<long>(k), bits) /
                                 BigFloat(Nmod, bits)) +
                             cos(two_pi * BigFloat(static_cast<long>(m), bits) /
                                 BigFloat(Nmod, bits));
            bool infinite = abs(sigma) < pow10(-(digits - 5), bits);
            BigComplex w(bits);
            if (!infinite)
                w = BigComplex(BigFloat(1L, bits) / (BigFloat(2L, bits) * sigma), BigFloat(bits));

            NickelPoint* slot = nullptr;
            for (auto& np : out) {
                if (np.at_infinity != infinite) continue;
                if (infinite || abs(np.w - w) < close) {
                    slot = &np;
                    break;
                }
            }
            if (!slot) {
                NickelPoint np;
                np.at_infinity = infinite;
                np.w = w;
                if (!infinite) {
                    // exact value when the continued fraction locks on
                    auto cand = rational_candidate(w.re, Int(1000000));
                    if (cand &&
                        abs(w.re - BigFloat(*cand, bits)) < pow10(-(digits - 6), bits))
                        np.w_rational = cand;
                    // |s| of the two branches of s + 1/s = sigma
                    BigComplex sc(sigma, BigFloat(bits));
                    BigComplex disc = sqrt(sc * sc - BigComplex(4L, bits));
                    BigComplex half(BigFloat(Rat(1, 2), bits), BigFloat(bits));
                    np.s_abs.push_back(abs(half * (sc + disc)));
                    np.s_abs.push_back(abs(half * (sc - disc)));
                }
                out.push_back(np);
                slot = &out.back();
            }
            slot->mk.push_back({m, k});
        }
    return out;
}

BigComplex w_of_s(const BigComplex& s) {
    BigComplex one(1L, s.prec());
    BigComplex den = one + s * s;
    if (abs(den) < pow10(-(digits_for_bits(s.prec()) - 8), s.prec()))
        throw std::domain_error("w_of_s: w is infinite at s = +-i");
    return s / (BigComplex(2L, s.prec()) * den);
}

std::pair<BigComplex, BigComplex> s_of_w(const BigComplex& w) {
    if (w.is_zero()) throw std::domain_error("s_of_w: w must be nonzero");
    const mpfr_prec_t bits = w.prec();
    BigComplex sigma = BigComplex(1L, bits) / (BigComplex(2L, bits) * w);
    BigComplex disc = sqrt(sigma * sigma - BigComplex(4L, bits));
    BigComplex half(BigFloat(Rat(1, 2), bits), BigFloat(bits));
    return {half * (sigma + disc), half * (sigma - disc)};
}

BigComplex normalization_factor(const BigComplex& s, Parity parity, CutSide hint) {
    const mpfr_prec_t bits = s.prec();
    if (abs(s) < pow10(-(digits_for_bits(bits) - 8), bits))
        throw std::domain_error("normalization_factor: s must be nonzero");
    BigComplex one(1L, bits);
    BigComplex s2 = s * s, s4 = s2 * s2;
    BigComplex arg = (parity == Parity::Odd) ? one - s4 : one - one / s4;
    const BigFloat eps = pow10(-(digits_for_bits(bits) - 10), bits);
    if (abs(arg) < eps) return BigComplex(bits);  // fourth root of 0
    if (abs(arg.im) < eps && arg.re.is_negative()) {
        if (hint == CutSide::None)
            throw std::domain_error(
                "normalization_factor: argument on the branch cut; pass a side hint");
        // principal fourth root with the chosen approach side
        BigFloat r = pow(abs(arg), BigFloat(0.25, bits));
        BigFloat pi4 = const_pi(bits) / BigFloat(4L, bits);
        BigFloat theta = (hint == CutSide::Above) ? pi4 : -pi4;
        BigComplex root(r * cos(theta), r * sin(theta));
        return (parity == Parity::Odd) ? root / s : root;
    }
    BigComplex root = exp(BigComplex(BigFloat(0.25, bits), BigFloat(bits)) * log(arg));
    return (parity == Parity::Odd) ? root / s : root;
}

// ---------------------------------------------------------------------

namespace {

TrigSeries cos_phi(unsigned angles, long T, unsigned j) {
    // angle j in 0..n-1; the last angle is -(sum of the others)
    std::vector<int> plus(angles, 0), minus(angles, 0);
    if (j < angles) {
        plus[j] = 1;
        minus[j] = -1;
    } else {
        for (unsigned t = 0; t < angles; ++t) {
            plus[t] = -1;
            minus[t] = 1;
        }
    }
    const Rat half(1, 2);
    return TrigSeries::mode(angles, T, plus, 0, half) +
           TrigSeries::mode(angles, T, minus, 0, half);
}

TrigSeries cos_diff(unsigned angles, long T, unsigned i, unsigned j) {
    // cos(phi_i - phi_j) with the last angle eliminated
    auto delta = [&](unsigned t) {
        std::vector<int> d(angles, 0);
        if (t < angles)
            d[t] = 1;
        else
            for (unsigned u = 0; u < angles; ++u) d[u] = -1;
        return d;
    };
    std::vector<int> di = delta(i), dj = delta(j), plus(angles), minus(angles);
    for (unsigned t = 0; t < angles; ++t) {
        plus[t] = di[t] - dj[t];
        minus[t] = dj[t] - di[t];
    }
    const Rat half(1, 2);
    return TrigSeries::mode(angles, T, plus, 0, half) +
           TrigSeries::mode(angles, T, minus, 0, half);
}

struct AngleSeries {
    TrigSeries x, y;
};

AngleSeries xy_tilde(unsigned angles, long T, unsigned j) {
    // x~ solves w(1 + x^2) = (1 - 2 w cos phi) x, w-adic fixed point;
    // y~ = 2w ((1-2w cos phi)^2 - 4w^2)^{-1/2}
    TrigSeries one = TrigSeries::one(angles, T);
    TrigSeries twowc = cos_phi(angles, T, j).scaled(Rat(2)).shifted(1);
    TrigSeries x(angles, T);
    for (long it = 0; it <= T; ++it) {
        TrigSeries num = (one + x * x).shifted(1);
        x = TrigSeries::solve_one_minus(twowc, num);
    }
    TrigSeries lin = one - twowc;
    TrigSeries A = lin * lin - TrigSeries::one(angles, T).scaled(Rat(4)).shifted(2);
    TrigSeries y = TrigSeries::inv_sqrt(A).scaled(Rat(2)).shifted(1);
    return {std::move(x), std::move(y)};
}

}  // namespace

guess::SeriesData chi_tilde_series(unsigned n, long T) {
    if (n < 1 || n > 3) throw std::invalid_argument("chi_tilde_series: n must be 1, 2 or 3");
    if (T < 1) throw std::invalid_argument("chi_tilde_series: T >= 1");
    guess::SeriesData out;
    {
        std::ostringstream os;
        os << "chi_tilde(" << n << ") T=" << T;
        out.origin = os.str();
    }
    if (n == 1) {
        out.coefficients.assign(T + 1, Rat(0));
        Rat c(2);
        for (long k = 1; k <= T; ++k) {
            out.coefficients[k] = c;
            c *= 4;
        }
        return out;
    }
    if (n == 3 && T > 30)
        throw std::invalid_argument("chi_tilde_series: T > 30 for n = 3 exceeds the guard");

    const unsigned angles = n - 1;
    std::vector<AngleSeries> xy;
    for (unsigned j = 0; j < n; ++j) xy.push_back(xy_tilde(angles, T, j));

    TrigSeries X = xy[0].x;
    for (unsigned j = 1; j < n; ++j) X = X * xy[j].x;
    TrigSeries one = TrigSeries::one(angles, T);
    TrigSeries R = TrigSeries::solve_one_minus(X, one + X);

    TrigSeries H = one;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            TrigSeries xij = xy[i].x * xy[j].x;
            TrigSeries invm = TrigSeries::solve_one_minus(xij, one);
            TrigSeries sin2 = one.scaled(Rat(1, 2)) - cos_diff(angles, T, i, j).scaled(Rat(1, 2));
            H = H * xij.scaled(Rat(4)) * invm * invm * sin2;
        }

    TrigSeries integrand = xy[0].y;
    for (unsigned j = 1; j < n; ++j) integrand = integrand * xy[j].y;
    integrand = integrand * R * H;

    out.coefficients.assign(T + 1, Rat(0));
    for (long k = 0; k <= T; ++k) out.coefficients[k] = integrand.constant_mode(k);
    return out;
}

}  // namespace ising
}  // namespace fuchs
