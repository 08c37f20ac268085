#pragma once

#include "fuchs/transport.hpp"

#include <string>
#include <vector>

namespace fuchs {

/// Where to loop and how to reach it from the base point. Empty waypoints
/// mean the straight segment (mandatory waypoints for infinity).
struct LoopSpec {
    LocalPoint point;
    std::vector<BigComplex> waypoints;
};

struct MonodromyGenerator {
    LocalPoint loop_point;
    LocalPoint base_point;
    CMatrix matrix;                       // in the basis at the base point
    long precision_estimate = 0;
    std::vector<BigComplex> path;
};

/// Monodromy generators M_base(q) = C(base,q) Loc_q(2*pi*i) C(base,q)^{-1}
/// for each listed loop, all expressed in the local basis at the base point.
/// Loops are counterclockwise.
std::vector<MonodromyGenerator> monodromy_generators(const FuchsianODE& ode,
                                                     const LocalPoint& base,
                                                     const std::vector<LoopSpec>& loops,
                                                     long digits);

struct ProductRelationReport {
    BigFloat residual;                   // |M_1 ... M_k - Id|_max for the given order
    std::vector<BigFloat> cyclic_residuals;
    size_t best_shift = 0;
};

/// Residual of the product relation in the given ordering, plus the best
/// cyclic shift (cyclic shifts are conjugate, so residuals stay comparable).
ProductRelationReport product_relation(const std::vector<MonodromyGenerator>& gens,
                                       const std::vector<size_t>& ordering);

}  // namespace fuchs
