#include "fuchs/monodromy.hpp"

#include <stdexcept>

namespace fuchs {

namespace {

// the local monodromy only needs the table down to the largest exponent gap
LocalBasis basis_for_loc(const FuchsianODE& ode, const LocalPoint& p) {
    for (long T : {16L, 64L, 256L, 1024L}) {
        try {
            return local_basis(ode, p, T);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::invalid_argument("monodromy: exponent gap too large");
}

}  // namespace

std::vector<MonodromyGenerator> monodromy_generators(const FuchsianODE& ode,
                                                     const LocalPoint& base,
                                                     const std::vector<LoopSpec>& loops,
                                                     long digits) {
    std::vector<MonodromyGenerator> out;
    for (const LoopSpec& loop : loops) {
        MonodromyGenerator gen;
        gen.loop_point = loop.point;
        gen.base_point = base;
        if (loop.point == base) {
            // loop around the base itself: the local monodromy in place
            gen.matrix = local_monodromy(basis_for_loc(ode, base)).numeric(digits);
            gen.precision_estimate = digits;
            out.push_back(std::move(gen));
            continue;
        }
        // one fixed frame at the base for every loop, so the conjugated
        // generators compose; the frame at the loop point cancels in
        // C Loc C^{-1} and needs no pinning
        const std::optional<BigComplex> base_frame{
            BigComplex(1L, bits_for_digits(digits + 15))};
        ConnectionMatrix C =
            loop.waypoints.empty() && !loop.point.infinite && !base.infinite
                ? connect(ode, base, loop.point, digits, base_frame)
                : path_connect(ode, base, loop.point, loop.waypoints, digits, base_frame);
        CMatrix loc = local_monodromy(basis_for_loc(ode, loop.point)).numeric(digits);
        gen.matrix = C.entries * loc * C.entries.inverse();
        gen.precision_estimate = C.precision_estimate;
        gen.path = C.path;
        out.push_back(std::move(gen));
    }
    return out;
}

ProductRelationReport product_relation(const std::vector<MonodromyGenerator>& gens,
                                       const std::vector<size_t>& ordering) {
    if (gens.empty()) throw std::invalid_argument("product_relation: no generators");
    const size_t n = gens[0].matrix.rows();
    const mpfr_prec_t bits = gens[0].matrix.at(0, 0).prec();
    const size_t k = ordering.size();

    auto residual_for = [&](size_t shift) {
        CMatrix acc = CMatrix::identity(n, bits);
        for (size_t t = 0; t < k; ++t) acc = acc * gens.at(ordering[(t + shift) % k]).matrix;
        return (acc - CMatrix::identity(n, bits)).max_norm();
    };

    ProductRelationReport rep;
    rep.residual = residual_for(0);
    BigFloat best = rep.residual;
    rep.best_shift = 0;
    for (size_t s = 0; s < k; ++s) {
        BigFloat r = residual_for(s);
        rep.cyclic_residuals.push_back(r);
        if (r < best) {
            best = r;
            rep.best_shift = s;
        }
    }
    return rep;
}

}  // namespace fuchs
