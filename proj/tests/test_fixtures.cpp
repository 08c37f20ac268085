#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuchs/constants.hpp"
#include "fuchs/fixtures.hpp"
#include "fuchs/recognize.hpp"

using namespace fuchs;
using namespace fuchs::fixtures;

TEST_CASE("chi3 monodromy matrix entries") {
    SymbolicMatrix M = chi3_monodromy(1);
    CHECK(M.at(0, 0) == RatFun2::constant(Rat(-1)));
    // upper-right 3x3 block is zero
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 3; j < 6; ++j) CHECK(M.at(i, j).is_zero());
    // entry (4,6) = 1536 Omega^2 / (24 alpha^4) = 64 Omega^2 / alpha^4
    BiPoly a = BiPoly::var_a(), o = BiPoly::var_b();
    RatFun2 expect(Rat(64) * (o * o), a * a * a * a);
    CHECK(M.at(3, 5) == expect);
}

TEST_CASE("chi3 fixture identity battery is exact") {
    Chi3Report rep = chi3_fixture_checks();
    REQUIRE(rep.identities.size() == 5);
    for (const auto& c : rep.identities) {
        INFO(c.name, " ", c.witness);
        CHECK(c.holds);
    }
}

TEST_CASE("the literal power statement holds exactly for odd N") {
    Chi3Report rep = chi3_fixture_checks();
    CHECK(rep.power_identity_holds_for == std::vector<int>{1, 3, 5});
}

TEST_CASE("chi3 matrix at Omega = 0 squares to the identity") {
    SymbolicMatrix M0 = chi3_monodromy_scaled(Rat(0));
    CHECK(M0 * M0 == SymbolicMatrix::identity(6));
}

TEST_CASE("c014 exact entries") {
    auto m = c014_exact();
    auto names = c014_basis_names();
    REQUIRE(names.size() == 8);
    // (2,3) = -9 sqrt3/(64 pi): basis slot 5 is sqrt3/pi
    CHECK(m[1][2][5] == Rat(-9, 64));
    // (4,2) = 1/3 - 2 I3plus
    CHECK(m[3][1][0] == Rat(1, 3));
    CHECK(m[3][1][7] == Rat(-2));
    // (1,2) = 0
    for (size_t k = 0; k < 8; ++k) CHECK(m[0][1][k] == Rat(0));
}

TEST_CASE("c014 numeric rendering is hit exactly by recognition") {
    const long P = 150;
    CMatrix M = c014_numeric(P);
    recognize::ConstantBasis basis(c014_basis_names(), P);
    auto rec = recognize::recognize_matrix(M, basis, P);
    CHECK(rec.unresolved.empty());
    auto exact = c014_exact();
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            REQUIRE(rec.cells[i][j].resolved);
            CHECK(rec.cells[i][j].coeffs == exact[i][j]);
        }
}

TEST_CASE("recognition of the c014 rendering is idempotent") {
    const long P = 120;
    recognize::ConstantBasis basis(c014_basis_names(), P);
    CMatrix M = c014_numeric(P);
    auto rec1 = recognize::recognize_matrix(M, basis, P);
    REQUIRE(rec1.unresolved.empty());
    // re-render from the recognized coefficients and recognize again
    const mpfr_prec_t bits = bits_for_digits(P + 10);
    CMatrix M2(6, 6, bits);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            BigFloat acc(bits);
            for (size_t k = 0; k < basis.values().size(); ++k)
                if (rec1.cells[i][j].coeffs[k] != 0)
                    acc += BigFloat(rec1.cells[i][j].coeffs[k], bits) * basis.values()[k];
            M2.at(i, j) = BigComplex(acc, BigFloat(bits));
        }
    auto rec2 = recognize::recognize_matrix(M2, basis, P);
    REQUIRE(rec2.unresolved.empty());
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) CHECK(rec2.cells[i][j].coeffs == rec1.cells[i][j].coeffs);
}
