#pragma once

#include "fuchs/poly.hpp"

#include <optional>
#include <vector>

namespace fuchs {

/// All complex roots of a squarefree polynomial, Aberth-Ehrlich iteration
/// at the given precision. Roots are returned unordered.
std::vector<BigComplex> complex_roots(const Poly& f, long digits);

/// Same iteration on a polynomial given by complex coefficients (ascending).
std::vector<BigComplex> complex_roots_of(const std::vector<BigComplex>& coeffs, long digits);

/// Nearest rational with denominator <= bound to a real value, through the
/// continued-fraction convergents. No exactness claim; verify separately.
std::optional<Rat> rational_candidate(const BigFloat& x, const Int& max_den);

/// Exact rational roots with multiplicities. Complete: candidates come from
/// continued fractions of high-precision numeric roots and every candidate
/// is verified by exact evaluation.
std::vector<std::pair<Rat, unsigned>> rational_roots(const Poly& f);

/// One irreducible-over-Z factor of a squarefree primitive polynomial,
/// together with the numeric roots it accounts for.
struct IntegerFactor {
    Poly factor;                     // primitive, positive leading coefficient
    std::vector<BigComplex> roots;   // 30+ digit enclosures
};

/// Factor a squarefree primitive integer polynomial into irreducible factors
/// by clustering numeric roots into subsets with integer coefficient products.
/// Falls back to returning the whole polynomial as one block if the degree
/// exceeds `max_subset_degree` (callers flag such blocks).
std::vector<IntegerFactor> factor_squarefree(const Poly& f, unsigned max_subset_degree = 16);

}  // namespace fuchs
