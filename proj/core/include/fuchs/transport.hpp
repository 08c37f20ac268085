#pragma once

#include "fuchs/frobenius.hpp"

#include <string>
#include <vector>

namespace fuchs {

/// Taylor recurrence at an ordinary complex point. Coefficients of the
/// recentered operator are computed numerically once; solutions are then
/// generated from arbitrary initial jets.
class NumericTaylor {
public:
    NumericTaylor(const FuchsianODE& ode, const BigComplex& z0, long digits);

    /// Taylor coefficients c_0..c_T of the solution with derivative jet
    /// (y(z0), y'(z0), ..., y^{(n-1)}(z0)) at the center.
    std::vector<BigComplex> coefficients(const std::vector<BigComplex>& jet, long T) const;

    /// Derivatives 0..kmax of a coefficient series at offset x from the center.
    static std::vector<BigComplex> eval_derivs(const std::vector<BigComplex>& coef,
                                               const BigComplex& x, unsigned kmax);

    /// Terms needed for |x| <= r so the geometric tail drops below 10^-digits.
    long terms_for(const BigFloat& r, long digits) const;

    const BigFloat& radius() const { return radius_; }
    unsigned order() const { return n_; }

private:
    unsigned n_;
    mpfr_prec_t bits_;
    BigFloat radius_;                            // distance to nearest singularity
    std::vector<std::vector<BigComplex>> b_;     // recentered coefficients
    std::vector<std::vector<BigComplex>> g_;     // g_d(s) on integer arguments, lazy-free
    long mu_ = 0;
};

/// Distance from z to the nearest root of the leading coefficient.
BigFloat distance_to_singularities(const FuchsianODE& ode, const BigComplex& z, long digits);
/// Smallest pairwise distance between distinct finite singular points
/// (1 if fewer than two); the scale used by closeness guards.
BigFloat nearest_singularity_scale(const FuchsianODE& ode, long digits);

struct ConnectionMatrix {
    LocalPoint from, to;
    CMatrix entries;              // B_from(w) = C * B_to(w) on the overlap
    long precision_estimate = 0;  // digits, from an off-matching-point residual
    BigFloat condition;           // condition estimate of the solve (invertibility record)
    std::vector<BigComplex> path; // waypoints actually used
};

/// Connection matrix by series matching at the midpoint of [p, q]; both
/// disks must overlap. Residual at a second matching point gives the
/// precision estimate. Throws std::domain_error("use path_connect") when
/// the disks do not overlap. `base_frame`, when given, overrides the branch
/// anchor of the basis at p (default: the direction toward q); consumers
/// that combine several connections from one base point need one frame.
ConnectionMatrix connect(const FuchsianODE& ode, const LocalPoint& p, const LocalPoint& q,
                         long digits, const std::optional<BigComplex>& base_frame = {});

/// Transport a fundamental matrix (columns = solutions, rows = derivatives
/// 0..n-1) from z0 to z1 by one Taylor step; |z1-z0| must be at most half
/// the distance from z0 to the nearest singularity.
CMatrix taylor_step(const FuchsianODE& ode, const BigComplex& z0, const BigComplex& z1,
                    const CMatrix& F, long digits);

/// Connection matrix along the polyline p -> waypoints -> q, chaining Taylor
/// steps between the two singular disks. Throws "reroute" if the path
/// passes too close to a singular point. `base_frame` as in connect().
ConnectionMatrix path_connect(const FuchsianODE& ode, const LocalPoint& p,
                              const LocalPoint& q, const std::vector<BigComplex>& waypoints,
                              long digits, const std::optional<BigComplex>& base_frame = {});

}  // namespace fuchs
