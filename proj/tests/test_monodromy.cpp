#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuchs/monodromy.hpp"

using namespace fuchs;

namespace {

FuchsianODE gauss_ode(const Rat& a, const Rat& b, const Rat& c) {
    return FuchsianODE({Poly{-a * b}, Poly{c, -(a + b + Rat(1))}, Poly{Rat(0), Rat(1), Rat(-1)}});
}

}  // namespace

TEST_CASE("Gauss monodromy generators and the product relation") {
    FuchsianODE g = gauss_ode(Rat(1, 3), Rat(1, 5), Rat(1, 2));
    const long P = 50;
    const mpfr_prec_t bits = bits_for_digits(P + 15);
    BigComplex i_pt(BigFloat(bits), BigFloat(1L, bits));
    std::vector<LoopSpec> loops{
        {LocalPoint::at(Rat(0)), {}},
        {LocalPoint::at(Rat(1)), {}},
        {LocalPoint::infinity(), {i_pt}},
    };
    auto gens = monodromy_generators(g, LocalPoint::at(Rat(0)), loops, P);
    REQUIRE(gens.size() == 3);

    SUBCASE("traces and determinants match the classical eigenvalues") {
        // local exponents: {0, 1/2} at 0, {0, -1/30} at 1, {1/3, 1/5} at inf
        auto expect = [&](const Rat& r1, const Rat& r2) {
            return std::pair<BigComplex, BigComplex>{
                unit_root(r1, bits) + unit_root(r2, bits),
                unit_root(r1, bits) * unit_root(r2, bits)};
        };
        auto [t0, d0] = expect(Rat(0), Rat(1, 2));
        auto [t1, d1] = expect(Rat(0), Rat(-1, 30));
        auto [t2, d2] = expect(Rat(1, 3), Rat(1, 5));
        auto trace = [](const CMatrix& m) { return m.at(0, 0) + m.at(1, 1); };
        CHECK(abs(trace(gens[0].matrix) - t0) < pow10(-(P - 12)));
        CHECK(abs(gens[0].matrix.determinant() - d0) < pow10(-(P - 12)));
        CHECK(abs(trace(gens[1].matrix) - t1) < pow10(-(P - 12)));
        CHECK(abs(gens[1].matrix.determinant() - d1) < pow10(-(P - 12)));
        CHECK(abs(trace(gens[2].matrix) - t2) < pow10(-(P - 12)));
        CHECK(abs(gens[2].matrix.determinant() - d2) < pow10(-(P - 12)));
    }

    SUBCASE("product over the boundary ordering is the identity") {
        auto rep = product_relation(gens, {0, 1, 2});
        CHECK(rep.residual < pow10(-(P - 20)));
        // cyclic shifts are conjugate, so they close as well
        for (const auto& r : rep.cyclic_residuals) CHECK(r < pow10(-(P - 20)));
    }

    SUBCASE("a non-cyclic reordering of non-commuting generators fails loudly") {
        auto rep = product_relation(gens, {1, 0, 2});
        CHECK(rep.residual > BigFloat(0.1, bits));
    }
}

TEST_CASE("single-valued solution: trivial monodromy at its pole") {
    // (1-w) y' - y = 0, solution 1/(1-w)
    FuchsianODE ode({Poly{Rat(-1)}, Poly{Rat(1), Rat(-1)}});
    auto gens = monodromy_generators(ode, LocalPoint::at(Rat(0)),
                                     {{LocalPoint::at(Rat(1)), {}}}, 40);
    REQUIRE(gens.size() == 1);
    const mpfr_prec_t bits = bits_for_digits(50);
    CHECK(abs(gens[0].matrix.at(0, 0) - BigComplex(1L, bits)) < pow10(-35));
}

TEST_CASE("log solution: monodromy of {1, ln(1-w)} around w = 1") {
    // (1-w) y'' - y' = 0 has solutions {1, -ln(1-w)}
    FuchsianODE ode({Poly{}, Poly{Rat(-1)}, Poly{Rat(1), Rat(-1)}});
    const long P = 45;
    auto gens = monodromy_generators(ode, LocalPoint::at(Rat(0)),
                                     {{LocalPoint::at(Rat(1)), {}}}, P);
    REQUIRE(gens.size() == 1);
    const mpfr_prec_t bits = bits_for_digits(P + 15);
    const CMatrix& M = gens[0].matrix;
    // basis at the ordinary base 0 is {1, w + ...} with w-head = -ln(1-w);
    // one counterclockwise turn around 1 sends ln(1-w) to ln(1-w) + Omega,
    // so the w-headed solution gains -Omega * 1
    BigComplex omega(BigFloat(bits), BigFloat(2L, bits) * const_pi(bits));
    CHECK(abs(M.at(0, 0) - BigComplex(1L, bits)) < pow10(-(P - 10)));
    CHECK(abs(M.at(0, 1)) < pow10(-(P - 10)));
    CHECK(abs(M.at(1, 0) + omega) < pow10(-(P - 10)));
    CHECK(abs(M.at(1, 1) - BigComplex(1L, bits)) < pow10(-(P - 10)));
}

TEST_CASE("generator eigenvalues match local exponents on a fresh fixture") {
    // every generator's eigenvalue multiset is {e^{2 pi i rho}}
    FuchsianODE g = gauss_ode(Rat(1, 4), Rat(1, 6), Rat(1, 3));
    const long P = 45;
    const mpfr_prec_t bits = bits_for_digits(P + 15);
    auto gens = monodromy_generators(
        g, LocalPoint::at(Rat(0)),
        {{LocalPoint::at(Rat(0)), {}}, {LocalPoint::at(Rat(1)), {}}}, P);
    // at 0: {0, 1 - 1/3} = {0, 2/3}; at 1: {0, c - a - b = -1/12}
    auto check_pair = [&](const CMatrix& m, const Rat& r1, const Rat& r2) {
        BigComplex t = unit_root(r1, bits) + unit_root(r2, bits);
        BigComplex d = unit_root(r1, bits) * unit_root(r2, bits);
        CHECK(abs(m.at(0, 0) + m.at(1, 1) - t) < pow10(-(P - 12)));
        CHECK(abs(m.determinant() - d) < pow10(-(P - 12)));
    };
    check_pair(gens[0].matrix, Rat(0), Rat(2, 3));
    check_pair(gens[1].matrix, Rat(0), Rat(-1, 12));
}
