#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuchs/guess.hpp"
#include "fuchs/frobenius.hpp"

#include <cstdio>
#include <random>

using namespace fuchs;
using namespace fuchs::guess;

namespace {

SeriesData chi1_series(long N) {
    SeriesData s;
    s.origin = "chi1";
    s.coefficients.assign(N + 1, Rat(0));
    Rat c(2);
    for (long k = 1; k <= N; ++k) {
        s.coefficients[k] = c;
        c *= 4;
    }
    return s;
}

SeriesData geometric_series(long N) {
    SeriesData s;
    s.origin = "geometric";
    s.coefficients.assign(N + 1, Rat(1));
    return s;
}

SeriesData hyp2f1_series(const Rat& a, const Rat& b, const Rat& c, long N) {
    SeriesData s;
    s.origin = "2F1";
    s.coefficients.assign(N + 1, Rat(0));
    Rat term(1);
    for (long k = 0; k <= N; ++k) {
        s.coefficients[k] = term;
        term *= (a + k) * (b + k) / ((c + k) * Rat(k + 1));
        term.canonicalize();
    }
    return s;
}

FuchsianODE chi1_ode() {
    return FuchsianODE({Poly{Rat(-1)}, Poly{Rat(0), Rat(1), Rat(-4)}});
}

FuchsianODE gauss_ode(const Rat& a, const Rat& b, const Rat& c) {
    return FuchsianODE({Poly{-a * b}, Poly{c, -(a + b + Rat(1))}, Poly{Rat(0), Rat(1), Rat(-1)}});
}

}  // namespace

TEST_CASE("chi1 series is encoded by its first-order equation") {
    auto res = guess_ode(chi1_series(30));
    REQUIRE(res.has_value());
    CHECK(res->ode == chi1_ode());
    CHECK(res->order == 1);
    CHECK(res->verified_through == 29);
    CHECK(res->minimal_order_certificate);
}

TEST_CASE("geometric series") {
    auto res = guess_ode(geometric_series(30));
    REQUIRE(res.has_value());
    CHECK(res->ode == FuchsianODE({Poly{Rat(-1)}, Poly{Rat(1), Rat(-1)}}));
}

TEST_CASE("Gauss series recovers the exact hypergeometric equation") {
    auto res = guess_ode(hyp2f1_series(Rat(1, 3), Rat(1, 5), Rat(1, 2), 60));
    REQUIRE(res.has_value());
    CHECK(res->ode == gauss_ode(Rat(1, 3), Rat(1, 5), Rat(1, 2)));
    CHECK(res->order == 2);
}

TEST_CASE("modular and exact elimination produce identical equations") {
    for (const SeriesData& s : {chi1_series(30), geometric_series(25),
                                hyp2f1_series(Rat(1, 3), Rat(1, 5), Rat(1, 2), 60)}) {
        GuessOptions mod_opt, exact_opt;
        mod_opt.method = Method::Modular;
        exact_opt.method = Method::Exact;
        auto a = guess_ode(s, mod_opt);
        auto b = guess_ode(s, exact_opt);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->ode == b->ode);
    }
}

TEST_CASE("scaling the series leaves the normalized equation unchanged") {
    SeriesData s = hyp2f1_series(Rat(1, 3), Rat(1, 5), Rat(1, 2), 60);
    SeriesData scaled = s;
    for (auto& c : scaled.coefficients) c *= Rat(-7, 3);
    auto a = guess_ode(s), b = guess_ode(scaled);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->ode == b->ode);
}

TEST_CASE("verify_annihilation") {
    SUBCASE("chi1 equation against its own series: M = N - 1") {
        CHECK(verify_annihilation(chi1_ode(), chi1_series(30)) == 29);
    }
    SUBCASE("wrong equation exposes the mismatch early") {
        // y' - y = 0 against the geometric series
        FuchsianODE wrong({Poly{Rat(-1)}, Poly{Rat(1)}});
        CHECK(verify_annihilation(wrong, geometric_series(30)) < 3);
    }
    SUBCASE("Gauss equation against its own series: M = N - 2") {
        FuchsianODE g = gauss_ode(Rat(1, 3), Rat(1, 5), Rat(1, 2));
        CHECK(verify_annihilation(g, hyp2f1_series(Rat(1, 3), Rat(1, 5), Rat(1, 2), 60)) == 58);
    }
}

TEST_CASE("round trip through a local analytic solution") {
    // series of the analytic solution of a generic hypergeometric fixture,
    // produced by the Frobenius module rather than a closed form
    FuchsianODE ode = gauss_ode(Rat(1, 7), Rat(2, 7), Rat(3, 7));
    LocalBasis basis = local_basis(ode, LocalPoint::at(Rat(0)), 80);
    const LocalSolution* analytic = nullptr;
    for (const auto& s : basis.solutions)
        if (s.exponent == Rat(0) && s.log_degree == 0) analytic = &s;
    REQUIRE(analytic != nullptr);
    SeriesData s;
    s.origin = "synthetic";
    s.coefficients.assign(81, Rat(0));
    for (long k = 0; k <= 80; ++k) s.coefficients[k] = analytic->coeff(k, 0);
    auto res = guess_ode(s);
    REQUIRE(res.has_value());
    CHECK(res->ode == ode);
    CHECK(verify_annihilation(res->ode, s) >=
          static_cast<long>(s.coefficients.size()) - 1 - res->ode.order());
}

TEST_CASE("series file round trip") {
    SeriesData s = chi1_series(12);
    std::string path = "guess_series_roundtrip.txt";
    save_series(s, path);
    SeriesData t = load_series(path);
    CHECK(t.coefficients == s.coefficients);
    std::remove(path.c_str());
}

TEST_CASE("malformed series files carry position diagnostics") {
    std::string path = "guess_series_bad.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        fputs("0 1\n1 nonsense\n", f);
        fclose(f);
    }
    try {
        load_series(path);
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::remove(path.c_str());
}
