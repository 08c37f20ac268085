#pragma once

#include "fuchs/cmatrix.hpp"
#include "fuchs/ode.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fuchs {

/// Expansion center for a local basis: a finite rational point or infinity
/// (where the local coordinate is t = 1/w).
struct LocalPoint {
    bool infinite = false;
    Rat value;

    static LocalPoint at(Rat v) {
        v.canonicalize();
        return {false, std::move(v)};
    }
    static LocalPoint infinity() { return {true, Rat(0)}; }
    bool operator==(const LocalPoint& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string str() const { return infinite ? "inf" : value.get_str(); }
};

/// One Frobenius solution at a point p:
///   y(w) = sum_{k=0}^{T} sum_{j=0}^{L} c[k][j] x^{rho+k} ln(x)^j,  x = w - p
/// (x = 1/w at infinity). Coefficients are exact rationals.
struct LocalSolution {
    Rat exponent;                          // rho
    unsigned log_degree = 0;               // highest ln power present
    unsigned head_log = 0;                 // ln power of the defining head
    std::vector<std::vector<Rat>> table;   // [k][j]
    long truncation = 0;                   // T

    Rat coeff(long k, unsigned j) const {
        if (k < 0 || k >= static_cast<long>(table.size())) return Rat(0);
        if (j >= table[k].size()) return Rat(0);
        return table[k][j];
    }
};

struct LocalBasis {
    LocalPoint point;
    unsigned order = 0;
    std::vector<LocalSolution> solutions;  // exponent ascending, then log degree
    BigFloat radius;                       // distance to the nearest other singularity
    long truncation = 0;
    std::string ordering_rule = "exponent-ascending,log-ascending";
};

/// Internal expansion data L(x^s) = sum_d g_d(s) x^{s+mu+d} for coefficients
/// recentered at the expansion point. Exposed for reuse by other modules.
struct LocalExpansion {
    long mu = 0;
    std::vector<Poly> g;  // polynomials in s over Q
};
LocalExpansion local_expansion(const std::vector<Poly>& recentered_coeffs);

/// Frobenius basis at p with truncation order T. Exponents must be rational
/// (exact arithmetic throughout); log blocks are introduced exactly where a
/// resonance obstructs the recurrence, and the basis is echelon-normalized:
/// every solution has coefficient 1 at its own head and 0 at the heads of
/// the other solutions in its congruence class.
/// Throws std::domain_error at an irregular point, std::invalid_argument
/// ("T too small") if T is below the largest integer exponent gap.
LocalBasis local_basis(const FuchsianODE& ode, const LocalPoint& p, long T);

struct BasisEvaluation {
    CMatrix jets;       // rows = solutions, cols = d/dw derivatives 0..n-1
    BigFloat tail;      // geometric tail estimate at the evaluation point
};

/// Evaluate all solutions and their w-derivatives at w. `direction` anchors
/// the branch: arg is measured so that `direction` has argument 0, which
/// makes series matching along a segment toward a neighbor reproducible.
/// Throws std::domain_error if w is outside the disk of convergence and
/// std::runtime_error("precision unreachable at this point") if the tail
/// estimate exceeds 10^-digits.
BasisEvaluation evaluate_basis(const LocalBasis& basis, const BigComplex& w,
                               long digits, const BigComplex& direction);
/// Convenience overload: direction defaults to +1.
BasisEvaluation evaluate_basis(const LocalBasis& basis, const BigComplex& w, long digits);

/// Local monodromy of the basis under one counterclockwise loop:
/// x^rho picks up e^{rho*Omega} and ln -> ln + Omega. The semisimple factor
/// is the exact root of unity e^{2*pi*i*rho} per congruence class; the
/// unipotent factor is polynomial in the formal log-shift Omega.
struct LocalMonodromy {
    struct Block {
        Rat class_exponent;            // exponent mod 1, in [0,1)
        long zeta_num = 0, zeta_den = 1;  // semisimple factor e^{2 pi i num/den}
        std::vector<size_t> members;   // indices into basis.solutions
        std::vector<std::vector<Poly>> unipotent;  // polynomials in Omega
    };
    size_t dim = 0;
    std::vector<Block> blocks;

    /// Numeric matrix at Omega = 2*pi*i (counterclockwise loop).
    CMatrix numeric(long digits) const;
    /// Numeric matrix at an arbitrary Omega (testing hook).
    CMatrix numeric_at(const BigComplex& omega, long digits) const;
    /// Matrix over Q[Omega] when every semisimple factor is +-1;
    /// throws std::domain_error otherwise. sign_out picks up the factor.
    std::vector<std::vector<Poly>> symbolic(std::vector<int>* signs_out = nullptr) const;
    /// True iff the monodromy is exactly the identity (integer exponents,
    /// trivial unipotent part): the apparent-point criterion.
    bool is_identity() const;
};

LocalMonodromy local_monodromy(const LocalBasis& basis);

}  // namespace fuchs
