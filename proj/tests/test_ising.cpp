#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuchs/guess.hpp"
#include "fuchs/ising.hpp"

#include "oracles.hpp"

using namespace fuchs;
using namespace fuchs::ising;

TEST_CASE("Nickel singularity list for n = 1") {
    auto pts = nickel_singularities(1);
    REQUIRE(pts.size() == 2);
    bool saw_one = false, saw_mhalf = false;
    for (const auto& p : pts) {
        REQUIRE(!p.at_infinity);
        REQUIRE(p.w_rational.has_value());
        if (*p.w_rational == Rat(1)) saw_one = true;
        if (*p.w_rational == Rat(-1, 2)) saw_mhalf = true;
        // all candidates lie on the |s| = 1 circle
        for (const auto& sa : p.s_abs) CHECK(abs(sa - BigFloat(1L, sa.prec())) < pow10(-30));
    }
    CHECK(saw_one);
    CHECK(saw_mhalf);
}

TEST_CASE("the quadratic roots of 1 + 3w + 4w^2 are not Nickel points") {
    auto pts = nickel_singularities(1);
    const mpfr_prec_t bits = bits_for_digits(50);
    BigComplex w1(BigFloat(Rat(-3, 8), bits), sqrt(BigFloat(7L, bits)) / BigFloat(8L, bits));
    for (const auto& p : pts) {
        CHECK(abs(p.w - w1) > BigFloat(0.1, bits));
        CHECK(abs(p.w - conj(w1)) > BigFloat(0.1, bits));
    }
}

TEST_CASE("Nickel n = 2 contains (sqrt5 + 1)/4") {
    auto pts = nickel_singularities(2);
    const mpfr_prec_t bits = bits_for_digits(50);
    BigFloat expect = (sqrt(BigFloat(5L, bits)) + BigFloat(1L, bits)) / BigFloat(4L, bits);
    bool found = false;
    for (const auto& p : pts)
        if (!p.at_infinity && abs(p.w - BigComplex(expect, BigFloat(bits))) < pow10(-30))
            found = true;
    CHECK(found);
}

TEST_CASE("w(s) and its branches") {
    const mpfr_prec_t bits = bits_for_digits(60);
    SUBCASE("s = 1 and s = -1 are the ferromagnetic points") {
        CHECK(abs(w_of_s(BigComplex(1L, bits)) -
                  BigComplex(BigFloat(Rat(1, 4), bits), BigFloat(bits))) < pow10(-55));
        CHECK(abs(w_of_s(BigComplex(-1L, bits)) -
                  BigComplex(BigFloat(Rat(-1, 4), bits), BigFloat(bits))) < pow10(-55));
    }
    SUBCASE("Kramers-Wannier duality w(s) = w(1/s)") {
        BigComplex s(3L, bits);
        CHECK(abs(w_of_s(s) - w_of_s(BigComplex(1L, bits) / s)) < pow10(-55));
        CHECK(abs(w_of_s(s) - BigComplex(BigFloat(Rat(3, 20), bits), BigFloat(bits))) <
              pow10(-55));
    }
    SUBCASE("poles at s = +-i are signaled") {
        CHECK_THROWS_AS(w_of_s(make_i(bits)), std::domain_error);
    }
    SUBCASE("s branches at the quadratic point have |s| = sqrt2 and 1/sqrt2") {
        const mpfr_prec_t b2 = bits_for_digits(60);
        BigComplex w1(BigFloat(Rat(-3, 8), b2), sqrt(BigFloat(7L, b2)) / BigFloat(8L, b2));
        auto [s1, s2] = s_of_w(w1);
        BigFloat r1 = abs(s1), r2 = abs(s2);
        if (r1 < r2) std::swap(r1, r2);
        CHECK(abs(r1 - sqrt(BigFloat(2L, b2))) < pow10(-40));
        CHECK(abs(r2 - BigFloat(1L, b2) / sqrt(BigFloat(2L, b2))) < pow10(-40));
        // both branches map back to w1
        CHECK(abs(w_of_s(s1) - w1) < pow10(-40));
        CHECK(abs(w_of_s(s2) - w1) < pow10(-40));
    }
}

TEST_CASE("normalization factors") {
    const mpfr_prec_t bits = bits_for_digits(60);
    SUBCASE("odd at s = 1/2") {
        BigComplex s(BigFloat(Rat(1, 2), bits), BigFloat(bits));
        BigComplex v = normalization_factor(s, Parity::Odd);
        BigFloat expect =
            BigFloat(2L, bits) * pow(BigFloat(Rat(15, 16), bits), BigFloat(0.25, bits));
        CHECK(abs(v - BigComplex(expect, BigFloat(bits))) < pow10(-55));
    }
    SUBCASE("odd limit at s -> 1 vanishes") {
        BigComplex s(1L, bits);
        CHECK(abs(normalization_factor(s, Parity::Odd)) < pow10(-40));
    }
    SUBCASE("even at s = 2") {
        BigComplex s(2L, bits);
        BigComplex v = normalization_factor(s, Parity::Even);
        BigFloat expect = pow(BigFloat(Rat(15, 16), bits), BigFloat(0.25, bits));
        CHECK(abs(v - BigComplex(expect, BigFloat(bits))) < pow10(-55));
    }
    SUBCASE("cut requires a side hint") {
        // s real in (0,1) with s^4 > 1 impossible; use s with 1 - s^4 < 0: s = 3/2
        BigComplex s(BigFloat(Rat(3, 2), bits), BigFloat(bits));
        CHECK_THROWS_AS(normalization_factor(s, Parity::Odd), std::domain_error);
        BigComplex above = normalization_factor(s, Parity::Odd, CutSide::Above);
        BigComplex below = normalization_factor(s, Parity::Odd, CutSide::Below);
        CHECK(abs(above - conj(below)) < pow10(-50));
    }
}

TEST_CASE("chi-tilde series") {
    SUBCASE("n = 1 closed form") {
        auto s = chi_tilde_series(1, 4);
        CHECK(s.coefficients ==
              std::vector<Rat>{Rat(0), Rat(2), Rat(8), Rat(32), Rat(128)});
    }
    SUBCASE("n = 2 table and structure") {
        auto s = chi_tilde_series(2, 16);
        // leading coefficient 8 w^4 and the following even orders
        CHECK(s.coefficients[4] == Rat(8));
        CHECK(s.coefficients[6] == Rat(160));
        CHECK(s.coefficients[8] == Rat(2800));
        CHECK(s.coefficients[10] == Rat(47040));
        CHECK(s.coefficients[12] == Rat(776160));
        CHECK(s.coefficients[14] == Rat(12684672));
        CHECK(s.coefficients[16] == Rat(206125920));
        for (long k = 0; k < 4; ++k) CHECK(s.coefficients[k] == 0);
        for (long k = 5; k <= 15; k += 2) CHECK(s.coefficients[k] == 0);
    }
    SUBCASE("n = 3 starts at w^9") {
        auto s = chi_tilde_series(3, 10);
        for (long k = 0; k < 9; ++k) CHECK(s.coefficients[k] == 0);
        CHECK(s.coefficients[9] != 0);
        CHECK(s.coefficients[9] > 0);
    }
    SUBCASE("n = 3 guard rejects oversized truncations") {
        CHECK_THROWS_AS(chi_tilde_series(3, 40), std::invalid_argument);
    }
    SUBCASE("n = 3 against the two-angle quadrature oracle at w = 1/40") {
        auto s = chi_tilde_series(3, 15);
        const mpfr_prec_t bits = bits_for_digits(24);
        BigFloat w(Rat(1, 40), bits);
        BigFloat series_val(bits);
        for (size_t k = 0; k < s.coefficients.size(); ++k)
            if (s.coefficients[k] != 0)
                series_val += BigFloat(s.coefficients[k], bits) *
                              pow(w, BigFloat(static_cast<long>(k), bits));
        BigFloat quad = oracles::chi3_quadrature(w, 10);
        CHECK(abs(series_val - quad) < pow10(-6) * quad);
    }
    SUBCASE("quadrature oracle at w = 1/50") {
        auto s = chi_tilde_series(2, 20);
        const mpfr_prec_t bits = bits_for_digits(30);
        BigFloat w(Rat(1, 50), bits);
        BigFloat series_val(bits);
        for (size_t k = 0; k < s.coefficients.size(); ++k)
            if (s.coefficients[k] != 0)
                series_val += BigFloat(s.coefficients[k], bits) *
                              pow(w, BigFloat(static_cast<long>(k), bits));
        BigFloat quad = oracles::chi2_quadrature(w, 12);
        CHECK(abs(series_val - quad) < pow10(-8) * quad);
    }
}

TEST_CASE("TrigSeries reality and arithmetic") {
    // the chi2 integrand pieces stay conjugate-symmetric
    TrigSeries one = TrigSeries::one(1, 6);
    TrigSeries c = TrigSeries::mode(1, 6, {1}, 0, Rat(1, 2)) +
                   TrigSeries::mode(1, 6, {-1}, 0, Rat(1, 2));
    CHECK(c.is_real_symmetric());
    TrigSeries prod = c * c;
    CHECK(prod.is_real_symmetric());
    // cos^2 = 1/2 + cos(2 phi)/2: constant mode 1/2
    CHECK(prod.constant_mode(0) == Rat(1, 2));
    TrigSeries asym = TrigSeries::mode(1, 6, {1}, 0, Rat(1));
    CHECK(!asym.is_real_symmetric());
}

TEST_CASE("chi2 series feeds the guesser: order two") {
    auto s = chi_tilde_series(2, 40);
    auto res = guess::guess_ode(s);
    REQUIRE(res.has_value());
    CHECK(res->ode.order() == 2);
    CHECK(res->verified_through >= 38);
}
