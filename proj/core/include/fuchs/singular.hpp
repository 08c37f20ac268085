#pragma once

#include "fuchs/algebraic.hpp"
#include "fuchs/ode.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fuchs {

/// A point given by its primitive integer minimal polynomial plus a complex
/// enclosure (30 digits) isolating one root.
struct AlgebraicPointData {
    Poly min_poly;
    BigComplex enclosure;
};

class SingularPoint {
public:
    enum class Kind { Rational, Algebraic, Infinity };

    static SingularPoint rational(Rat v);
    static SingularPoint algebraic(AlgebraicPointData a, bool exact_arith);
    static SingularPoint infinity();

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    const Rat& rat() const { return rat_; }
    const AlgebraicPointData& alg() const { return alg_; }
    /// False on blocks whose minimal polynomial was too large to handle
    /// exactly ("no exact exponent arithmetic").
    bool exact_exponent_arithmetic() const { return exact_; }

    /// Numeric location at the requested precision (refined by Newton
    /// iteration from the stored enclosure for algebraic points).
    BigComplex location(long digits) const;

    std::string str() const;

private:
    Kind kind_ = Kind::Rational;
    Rat rat_;
    AlgebraicPointData alg_;
    bool exact_ = true;
};

/// Exponent multiset at a point. `indicial` is the exact indicial polynomial
/// when the point is rational or infinity (empty otherwise); exponents split
/// into the exact rational ones and numeric enclosures for the rest.
struct ExponentSet {
    Poly indicial;
    std::vector<std::pair<Rat, unsigned>> rational;  // value, multiplicity
    std::vector<BigComplex> irrational;              // multiplicity by repetition
    bool regular = true;

    unsigned count() const {
        unsigned c = static_cast<unsigned>(irrational.size());
        for (const auto& [r, m] : rational) c += m;
        return c;
    }
    Rat exponent_sum() const;  // exact sum of all roots (from the indicial poly)
};

/// All roots of the leading coefficient (grouped by irreducible factor over Z)
/// plus the point at infinity, in deterministic order: rationals ascending,
/// then algebraic by (degree, minimal polynomial, enclosure), then infinity.
std::vector<SingularPoint> singular_points(const FuchsianODE& ode);

/// Indicial exponents at p; at an ordinary point returns {0,...,n-1}.
/// Throws std::domain_error("irregular singular point") if the Fuchs
/// criterion fails at p.
ExponentSet indicial_exponents(const FuchsianODE& ode, const SingularPoint& p,
                               long digits = 40);
ExponentSet indicial_exponents(const FuchsianODE& ode, const Rat& p, long digits = 40);
ExponentSet indicial_exponents_at_infinity(const FuchsianODE& ode, long digits = 40);

struct FuchsReport {
    bool fuchsian = true;
    std::vector<SingularPoint> offending;
};
FuchsReport is_fuchsian(const FuchsianODE& ode);

/// True iff every local solution at p is analytic: exponents are distinct
/// nonnegative integers and no resonance forces a logarithm. Exact rational
/// arithmetic at rational points; exact number-field arithmetic at algebraic
/// points when the minimal polynomial degree allows it.
/// T < largest exponent gap throws std::invalid_argument("increase T").
bool is_apparent(const FuchsianODE& ode, const SingularPoint& p, long T = -1);
bool is_apparent(const FuchsianODE& ode, const Rat& p, long T = -1);

/// Abel-identity residual max_i |W'/W + a_{n-1}/a_n| over the samples, where
/// W is built from a numeric Taylor fundamental system near each sample and
/// differentiated termwise. Contract: residual < 10^-(digits-15).
BigFloat wronskian_logderiv_check(const FuchsianODE& ode,
                                  const std::vector<BigComplex>& samples,
                                  long digits);

}  // namespace fuchs
