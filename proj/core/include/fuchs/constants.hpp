#pragma once

#include "fuchs/bigcomplex.hpp"

#include <string>
#include <vector>

namespace fuchs {
namespace constants {

/// Names accepted by eval_constant.
std::vector<std::string> known_names();

/// Evaluate a named constant to P decimal digits. Throws
/// std::invalid_argument for an unknown name.
BigComplex eval_constant(const std::string& name, long digits);

/// Clausen function Cl_2(theta) = sum sin(n theta)/n^2, evaluated through
/// the zeta(2k) expansion; periodic and odd, reduced to [0, 2pi).
BigFloat clausen2(const BigFloat& theta, long digits);

/// Principal dilogarithm Li_2(z), cut along [1, inf). Series for small |z|,
/// reflection / inversion maps elsewhere, and the zeta-Bernoulli expansion
/// in u = log z near the unit circle. Real z on the cut throws with a
/// side-hint request.
BigComplex dilog(const BigComplex& z, long digits);

/// Trigamma psi(1, x) for rational x > 0: argument-shift recurrence plus
/// Euler-Maclaurin tail.
BigFloat trigamma(const Rat& x, long digits);

/// The Ising connection constants in closed form.
BigFloat i3_plus(long digits);
BigFloat i4_minus(long digits);

struct CrosscheckEntry {
    std::string first, second;
    BigFloat residual;
};
struct CrosscheckReport {
    std::vector<CrosscheckEntry> residuals;
    bool wu_reference_match = false;  // 51 reference digits
    std::string barnes_g = "not evaluated";
};
/// Pairwise residuals of the Clausen / dilog / polygamma forms of I3+.
CrosscheckReport i3_crosscheck(long digits);

/// Exact rational Bernoulli number B_n (B_1 = -1/2).
Rat bernoulli(unsigned n);

}  // namespace constants
}  // namespace fuchs
