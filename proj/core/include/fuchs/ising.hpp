#pragma once

#include "fuchs/bigcomplex.hpp"
#include "fuchs/guess.hpp"

#include <map>
#include <optional>
#include <vector>

namespace fuchs {
namespace ising {

/// Truncated series in w whose coefficients are trigonometric polynomials:
/// per power of w, a map from Fourier multi-indices (m_1..m_{n-1}) to
/// rational coefficients of e^{i m . phi}; the last angle is eliminated by
/// phi_n = -(phi_1 + ... + phi_{n-1}).
class TrigSeries {
public:
    TrigSeries(unsigned angles, long T);  // zero series

    unsigned angles() const { return angles_; }
    long truncation() const { return T_; }

    static TrigSeries one(unsigned angles, long T);
    /// e^{i m.phi} * w^k as a series
    static TrigSeries mode(unsigned angles, long T, const std::vector<int>& m, long k,
                           const Rat& c);

    Rat coeff(long k, const std::vector<int>& m) const;
    Rat constant_mode(long k) const;  // angular average coefficient

    friend TrigSeries operator+(const TrigSeries& a, const TrigSeries& b);
    friend TrigSeries operator-(const TrigSeries& a, const TrigSeries& b);
    friend TrigSeries operator*(const TrigSeries& a, const TrigSeries& b);
    TrigSeries scaled(const Rat& c) const;
    TrigSeries shifted(long k) const;  // multiply by w^k

    /// Reality check: coefficient at -m equals the coefficient at m.
    bool is_real_symmetric() const;

    /// w-adic solve of (1 - g) z = rhs for g with positive valuation.
    static TrigSeries solve_one_minus(const TrigSeries& g, const TrigSeries& rhs);
    /// A^{-1/2} for A = 1 + O(w), by Newton iteration in the w-adic metric.
    static TrigSeries inv_sqrt(const TrigSeries& A);

private:
    int64_t encode(const std::vector<int>& m) const;
    unsigned angles_;
    long T_;
    std::vector<std::map<int64_t, Rat>> c_;
};

struct NickelPoint {
    bool at_infinity = false;
    BigComplex w;
    std::optional<Rat> w_rational;           // exact value when recognized
    std::vector<std::pair<int, int>> mk;     // (m, k) classes mapping here
    std::vector<BigFloat> s_abs;             // |s| of the two branches
};

/// Singularity candidates of chi^(2n+1): solutions of
/// 2(s + 1/s) = u^k + u^-k + u^m + u^-m with u = e^{2 pi i/(2n+1)},
/// reported as deduplicated w = 1/(2 sigma) values.
std::vector<NickelPoint> nickel_singularities(unsigned n, long digits = 40);

/// w(s) = s / (2 (1 + s^2)); Kramers-Wannier invariant, w(s) = w(1/s).
/// Throws std::domain_error at s = +-i where w is infinite.
BigComplex w_of_s(const BigComplex& s);
/// Both s-branches of w(s) = w: roots of s^2 - s/(2w)... (quadratic in s).
std::pair<BigComplex, BigComplex> s_of_w(const BigComplex& w);

enum class Parity { Odd, Even };
enum class CutSide { None, Above, Below };
/// Normalization factor S+ = (1-s^4)^{1/4}/s (odd) or S- = (1-s^-4)^{1/4}
/// (even), principal fourth root. On the branch cut a side hint is required.
BigComplex normalization_factor(const BigComplex& s, Parity parity,
                                CutSide hint = CutSide::None);

/// Desk-scale chi~^(n) series from the multiple-integral form, n in {1,2,3}.
/// n = 1 is the closed form 2w/(1-4w); n = 2,3 expand the integrand as
/// TrigSeries and take the constant Fourier mode. T <= 30 for n = 3.
guess::SeriesData chi_tilde_series(unsigned n, long T);

}  // namespace ising
}  // namespace fuchs
