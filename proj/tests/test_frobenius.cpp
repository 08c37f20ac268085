#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuchs/frobenius.hpp"
#include "fuchs/singular.hpp"
#include "fuchs/symbolic.hpp"

#include "oracles.hpp"

using namespace fuchs;

namespace {

FuchsianODE chi1_ode() {
    return FuchsianODE({Poly{Rat(-1)}, Poly{Rat(0), Rat(1), Rat(-4)}});
}

FuchsianODE gauss_ode(const Rat& a, const Rat& b, const Rat& c) {
    return FuchsianODE({Poly{-a * b}, Poly{c, -(a + b + Rat(1))}, Poly{Rat(0), Rat(1), Rat(-1)}});
}

// Exact check that a truncated log-series solution annihilates the operator
// through every order the truncation can certify:
// coefficient of x^{rho+mu+m} ln^t of L(y) is
//   sum_{k+d=m} sum_{j>=t} binom(j,t) g_d^{(j-t)}(rho+k) c[k][j].
bool annihilates(const FuchsianODE& ode, const LocalBasis& basis, size_t which) {
    const LocalSolution& sol = basis.solutions[which];
    std::vector<Poly> shifted = basis.point.infinite
                                    ? ode.at_infinity().shifted_coeffs(Rat(0))
                                    : ode.shifted_coeffs(basis.point.value);
    LocalExpansion ex = local_expansion(shifted);
    const long D = static_cast<long>(ex.g.size()) - 1;
    const unsigned L = sol.log_degree;
    std::vector<std::vector<Poly>> gder(ex.g.size());
    for (size_t d = 0; d < ex.g.size(); ++d) {
        gder[d].push_back(ex.g[d]);
        for (unsigned r = 1; r <= L; ++r) gder[d].push_back(gder[d][r - 1].derivative());
    }
    long binom[16][16] = {};
    for (int i = 0; i < 16; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
    }
    for (long m = 0; m <= sol.truncation; ++m) {
        for (unsigned t = 0; t <= L; ++t) {
            Rat acc(0);
            for (long d = 0; d <= std::min(D, m); ++d) {
                long k = m - d;
                const Rat arg = sol.exponent + Rat(k);
                for (unsigned j = t; j <= L; ++j) {
                    Rat cv = sol.coeff(k, j);
                    if (cv == 0) continue;
                    acc += Rat(binom[j][t]) * gder[d][j - t].eval(arg) * cv;
                }
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

// lift a univariate polynomial to a BiPoly in (x, y), substituting x+y or
// one of the variables; used to state U(x) U(y) = U(x+y) exactly
BiPoly lift_sum(const Poly& p) {
    BiPoly acc;
    BiPoly s = BiPoly::var_a() + BiPoly::var_b(), pw = BiPoly::constant(Rat(1));
    for (long k = 0; k <= p.degree(); ++k) {
        acc = acc + p.coeff(k) * pw;
        pw = pw * s;
    }
    return acc;
}

BiPoly lift_var(const Poly& p, bool second) {
    BiPoly v = second ? BiPoly::var_b() : BiPoly::var_a(), acc, pw = BiPoly::constant(Rat(1));
    for (long k = 0; k <= p.degree(); ++k) {
        acc = acc + p.coeff(k) * pw;
        pw = pw * v;
    }
    return acc;
}

}  // namespace

TEST_CASE("chi1 basis at 0: single solution with 4^k coefficients") {
    LocalBasis b = local_basis(chi1_ode(), LocalPoint::at(Rat(0)), 10);
    REQUIRE(b.solutions.size() == 1);
    const LocalSolution& s = b.solutions[0];
    CHECK(s.exponent == Rat(1));
    CHECK(s.log_degree == 0);
    Rat c(1);
    for (long k = 0; k <= 10; ++k) {
        CHECK(s.coeff(k, 0) == c);
        c *= 4;
    }
    CHECK(annihilates(chi1_ode(), b, 0));
}

TEST_CASE("w y'' - 2 y' = 0 at 0: {1, w^3} with no logs") {
    FuchsianODE ode({Poly{}, Poly{Rat(-2)}, Poly{Rat(0), Rat(1)}});
    LocalBasis b = local_basis(ode, LocalPoint::at(Rat(0)), 5);
    REQUIRE(b.solutions.size() == 2);
    CHECK(b.solutions[0].exponent == Rat(0));
    CHECK(b.solutions[0].log_degree == 0);
    CHECK(b.solutions[1].exponent == Rat(3));
    CHECK(b.solutions[1].log_degree == 0);
    // exactly 1 and w^3
    for (long k = 1; k <= 5; ++k) {
        CHECK(b.solutions[0].coeff(k, 0) == Rat(0));
        CHECK(b.solutions[1].coeff(k, 0) == Rat(0));
    }
    CHECK(b.solutions[0].coeff(0, 0) == Rat(1));
    CHECK(b.solutions[1].coeff(0, 0) == Rat(1));
    CHECK(annihilates(ode, b, 0));
    CHECK(annihilates(ode, b, 1));
}

TEST_CASE("resonant Gauss (1/2,1/2,1) at 0: analytic + log pair") {
    FuchsianODE g = gauss_ode(Rat(1, 2), Rat(1, 2), Rat(1));
    LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), 20);
    REQUIRE(b.solutions.size() == 2);
    CHECK(b.solutions[0].exponent == Rat(0));
    CHECK(b.solutions[0].log_degree == 0);
    CHECK(b.solutions[1].exponent == Rat(0));
    CHECK(b.solutions[1].log_degree == 1);
    CHECK(b.solutions[1].head_log == 1);
    // y1 is 2F1(1/2,1/2;1;z): coefficients ((1/2)_k / k!)^2
    Rat c(1);
    for (long k = 1; k <= 5; ++k) {
        c *= Rat(2 * k - 1, 2 * k) * Rat(2 * k - 1, 2 * k);
        c.canonicalize();
        CHECK(b.solutions[0].coeff(k, 0) == c);
    }
    // the second solution contains y1 * ln z: its ln-column equals y1
    for (long k = 0; k <= 5; ++k)
        CHECK(b.solutions[1].coeff(k, 1) == b.solutions[0].coeff(k, 0));
    CHECK(annihilates(g, b, 0));
    CHECK(annihilates(g, b, 1));
}

TEST_CASE("generic Gauss bases annihilate at every point including infinity") {
    FuchsianODE g = gauss_ode(Rat(1, 3), Rat(1, 5), Rat(1, 2));
    for (LocalPoint p : {LocalPoint::at(Rat(0)), LocalPoint::at(Rat(1)), LocalPoint::infinity()}) {
        LocalBasis b = local_basis(g, p, 14);
        REQUIRE(b.solutions.size() == 2);
        CHECK(annihilates(g, b, 0));
        CHECK(annihilates(g, b, 1));
    }
}

TEST_CASE("basis evaluation") {
    const mpfr_prec_t bits = bits_for_digits(60);
    SUBCASE("chi1 closed form at w = 1/8") {
        LocalBasis b = local_basis(chi1_ode(), LocalPoint::at(Rat(0)), 220);
        BigComplex w(BigFloat(Rat(1, 8), bits), BigFloat(bits));
        auto ev = evaluate_basis(b, w, 50);
        // the head-1 solution is w/(1-4w): value 1/4 at w = 1/8
        CHECK(abs(ev.jets.at(0, 0) - BigComplex(BigFloat(0.25, bits), BigFloat(bits))) <
              pow10(-50));
    }
    SUBCASE("polynomial basis jets at an outer point") {
        FuchsianODE ode({Poly{}, Poly{Rat(-2)}, Poly{Rat(0), Rat(1)}});
        LocalBasis b = local_basis(ode, LocalPoint::at(Rat(0)), 5);
        BigComplex w(BigFloat(2L, bits), BigFloat(bits));
        auto ev = evaluate_basis(b, w, 40);
        CHECK(abs(ev.jets.at(0, 1)) < pow10(-38));                          // (1)' = 0
        CHECK(abs(ev.jets.at(1, 1) - BigComplex(12L, bits)) < pow10(-35));  // (w^3)' at 2
    }
    SUBCASE("Gauss value against direct 2F1 summation") {
        FuchsianODE g = gauss_ode(Rat(1, 2), Rat(1, 2), Rat(1));
        LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), 260);
        BigComplex z(BigFloat(Rat(1, 2), bits), BigFloat(bits));
        auto ev = evaluate_basis(b, z, 50);
        BigComplex expect = oracles::hyp2f1_direct(Rat(1, 2), Rat(1, 2), Rat(1), z, 60);
        CHECK(abs(ev.jets.at(0, 0) - expect) < pow10(-45));
    }
    SUBCASE("double-T contract: raising T moves values by less than 10^-P") {
        FuchsianODE g = gauss_ode(Rat(1, 3), Rat(1, 5), Rat(1, 2));
        LocalBasis b1 = local_basis(g, LocalPoint::at(Rat(0)), 200);
        LocalBasis b2 = local_basis(g, LocalPoint::at(Rat(0)), 250);
        BigComplex z(BigFloat(Rat(2, 5), bits), BigFloat(bits));
        auto e1 = evaluate_basis(b1, z, 40), e2 = evaluate_basis(b2, z, 40);
        CHECK((e1.jets - e2.jets).max_norm() < pow10(-40));
    }
    SUBCASE("evaluation outside the disk is rejected") {
        FuchsianODE g = gauss_ode(Rat(1, 2), Rat(1, 2), Rat(1));
        LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), 30);
        CHECK_THROWS_AS(evaluate_basis(b, BigComplex(2L, bits), 30), std::domain_error);
    }
}

TEST_CASE("local monodromy") {
    SUBCASE("{1, ln w}: the log shift block") {
        FuchsianODE ode({Poly{}, Poly{Rat(1)}, Poly{Rat(0), Rat(1)}});
        LocalBasis b = local_basis(ode, LocalPoint::at(Rat(0)), 8);
        LocalMonodromy mon = local_monodromy(b);
        auto M = mon.symbolic();
        CHECK(M[0][0] == Poly{Rat(1)});
        CHECK(M[0][1].is_zero());
        CHECK(M[1][0] == Poly{Rat(0), Rat(1)});  // Omega
        CHECK(M[1][1] == Poly{Rat(1)});
        CHECK(!mon.is_identity());
    }
    SUBCASE("half-integer exponent: semisimple factor -1") {
        // 2w y' + 3y = 0 has solution w^{-3/2}
        FuchsianODE ode({Poly{Rat(3)}, Poly{Rat(0), Rat(2)}});
        LocalBasis b = local_basis(ode, LocalPoint::at(Rat(0)), 6);
        REQUIRE(b.solutions.size() == 1);
        CHECK(b.solutions[0].exponent == Rat(-3, 2));
        LocalMonodromy mon = local_monodromy(b);
        std::vector<int> signs;
        auto M = mon.symbolic(&signs);
        CHECK(signs[0] == -1);
        CHECK(M[0][0] == Poly{Rat(-1)});
        CMatrix num = mon.numeric(50);
        CHECK(abs(num.at(0, 0) + BigComplex(1L, bits_for_digits(60))) < pow10(-45));
    }
    SUBCASE("resonant Gauss at 0: [[1,0],[Omega,1]]") {
        FuchsianODE g = gauss_ode(Rat(1, 2), Rat(1, 2), Rat(1));
        LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), 12);
        auto M = local_monodromy(b).symbolic();
        CHECK(M[0][0] == Poly{Rat(1)});
        CHECK(M[0][1].is_zero());
        CHECK(M[1][0] == Poly{Rat(0), Rat(1)});
        CHECK(M[1][1] == Poly{Rat(1)});
    }
    SUBCASE("apparent point has identity monodromy") {
        FuchsianODE ode({Poly{}, Poly{Rat(-2)}, Poly{Rat(0), Rat(1)}});
        LocalBasis b = local_basis(ode, LocalPoint::at(Rat(0)), 6);
        CHECK(local_monodromy(b).is_identity());
    }
}

TEST_CASE("local monodromy group laws") {
    FuchsianODE g = gauss_ode(Rat(1, 2), Rat(1, 2), Rat(1));
    LocalBasis b = local_basis(g, LocalPoint::at(Rat(0)), 12);
    LocalMonodromy mon = local_monodromy(b);

    SUBCASE("numeric: Loc(Omega) Loc(-Omega) = Id") {
        const mpfr_prec_t bits = bits_for_digits(60);
        BigComplex omega(BigFloat(bits), BigFloat(2L, bits) * const_pi(bits));
        CMatrix a = mon.numeric_at(omega, 50), bm = mon.numeric_at(-omega, 50);
        CHECK(((a * bm) - CMatrix::identity(2, bits)).max_norm() < pow10(-45));
    }
    SUBCASE("symbolic: U(x) U(y) = U(x+y) entrywise") {
        auto U = mon.symbolic();
        const size_t n = U.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                BiPoly acc;
                for (size_t k = 0; k < n; ++k)
                    acc = acc + lift_var(U[i][k], false) * lift_var(U[k][j], true);
                CHECK(acc == lift_sum(U[i][j]));
            }
    }
}

TEST_CASE("apparent point: no logs, nonnegative integer exponents, trivial monodromy") {
    struct Fixture {
        FuchsianODE ode;
        bool apparent;
    };
    std::vector<Fixture> fixtures{
        {FuchsianODE({Poly{}, Poly{Rat(-2)}, Poly{Rat(0), Rat(1)}}), true},
        {FuchsianODE({Poly{}, Poly{Rat(1)}, Poly{Rat(0), Rat(1)}}), false},
        {gauss_ode(Rat(1, 2), Rat(1, 2), Rat(1)), false},
    };
    for (const auto& f : fixtures) {
        const bool flag = is_apparent(f.ode, Rat(0));
        CHECK(flag == f.apparent);
        LocalBasis b = local_basis(f.ode, LocalPoint::at(Rat(0)), 12);
        bool no_logs = true, integer_nonneg = true;
        for (const auto& s : b.solutions) {
            if (s.log_degree > 0) no_logs = false;
            if (s.exponent.get_den() != 1 || s.exponent < 0) integer_nonneg = false;
        }
        if (flag) {
            CHECK(no_logs);
            CHECK(integer_nonneg);
        }
        CHECK(local_monodromy(b).is_identity() == flag);
    }
}

TEST_CASE("T below the largest exponent gap is rejected") {
    FuchsianODE ode({Poly{}, Poly{Rat(-2)}, Poly{Rat(0), Rat(1)}});
    CHECK_THROWS_WITH(local_basis(ode, LocalPoint::at(Rat(0)), 2), "T too small");
}

TEST_CASE("irregular point is rejected") {
    FuchsianODE ode({Poly{Rat(-1)}, Poly{}, Poly{Rat(1)}});  // y'' = y
    CHECK_THROWS_AS(local_basis(ode, LocalPoint::infinity(), 10), std::domain_error);
}
