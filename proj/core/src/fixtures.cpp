#include "fuchs/fixtures.hpp"

#include "fuchs/constants.hpp"

#include <sstream>

namespace fuchs {
namespace fixtures {

namespace {

BiPoly A() { return BiPoly::var_a(); }
BiPoly W() { return BiPoly::var_b(); }
BiPoly C(long v) { return BiPoly::constant(Rat(v)); }

SymbolicMatrix chi3_numerator(const Rat& scale) {
    // entries of 24 a^4 M(alpha, Omega) with Omega -> scale * Omega
    BiPoly a = A(), w = scale * W();
    BiPoly a2 = a * a, a4 = a2 * a2, w2 = w * w;

    BiPoly rho1 = C(5) * a4 + C(8) * w2 + C(8) * w2 * a2;
    BiPoly rho2 = C(4) * w * a2 - C(75) * w - C(15) * a2;
    BiPoly rho3 = C(5) * a2 + C(4) * w + C(4) * w * a2;

    SymbolicMatrix M(6, 6);
    auto set = [&](size_t i, size_t j, const BiPoly& p) { M.at(i, j) = RatFun2::of(p); };

    // left 6x3 block [A; B]
    set(0, 0, C(-24) * a4);
    set(1, 0, C(-48) * a4);
    set(1, 1, C(24) * a4);
    set(1, 2, C(-144) * a2 * w);
    set(2, 2, C(24) * a4);
    set(3, 0, C(-48) * rho1);
    set(3, 1, C(32) * w * rho2);
    set(3, 2, C(48) * w * (C(9) * a2 + C(80) * w));
    set(4, 0, C(12) * a2 * rho3);
    set(4, 1, C(4) * (C(75) - C(4) * a2) * a2 * w);
    set(4, 2, C(-300) * a2 * w);
    set(5, 0, -(C(87) + C(8) * a2) * a4);
    set(5, 2, C(3) * (C(4) * a2 - C(75)) * a2 * w);

    // lower-right 3x3 block C
    set(3, 3, C(24) * a4);
    set(3, 4, C(-384) * a2 * w);
    set(3, 5, C(1536) * w2);
    set(4, 4, C(24) * a4);
    set(4, 5, C(-192) * a2 * w);
    set(5, 5, C(24) * a4);
    return M;
}

}  // namespace

SymbolicMatrix chi3_monodromy_scaled(const Rat& omega_scale) {
    SymbolicMatrix num = chi3_numerator(omega_scale);
    BiPoly a = A();
    RatFun2 inv24a4(BiPoly::constant(Rat(1)), C(24) * a * a * a * a);
    SymbolicMatrix M(6, 6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) M.at(i, j) = num.at(i, j) * inv24a4;
    return M;
}

SymbolicMatrix chi3_monodromy(int omega_scale) {
    return chi3_monodromy_scaled(Rat(omega_scale));
}

SymbolicMatrix chi3_monodromy_negated() { return chi3_monodromy_scaled(Rat(-1)); }

namespace {

std::string first_mismatch(const SymbolicMatrix& X, const SymbolicMatrix& Y) {
    for (size_t i = 0; i < X.rows(); ++i)
        for (size_t j = 0; j < X.cols(); ++j)
            if (!(X.at(i, j) == Y.at(i, j))) {
                std::ostringstream os;
                os << "entry (" << i + 1 << "," << j + 1 << "): " << X.at(i, j).str()
                   << " != " << Y.at(i, j).str();
                return os.str();
            }
    return {};
}

IdentityCheck check_equal(const std::string& name, const SymbolicMatrix& X,
                          const SymbolicMatrix& Y) {
    IdentityCheck c;
    c.name = name;
    c.witness = first_mismatch(X, Y);
    c.holds = c.witness.empty();
    return c;
}

}  // namespace

Chi3Report chi3_fixture_checks() {
    Chi3Report rep;
    const SymbolicMatrix M = chi3_monodromy(1);
    const SymbolicMatrix Mneg = chi3_monodromy_negated();
    const SymbolicMatrix M0 = chi3_monodromy_scaled(Rat(0));
    const SymbolicMatrix Id = SymbolicMatrix::identity(6);

    rep.identities.push_back(check_equal("M(a,O)*M(a,-O) = Id", M * Mneg, Id));
    rep.identities.push_back(
        check_equal("M(a,O)^3 = M(a,3O)", M * M * M, chi3_monodromy(3)));
    rep.identities.push_back(
        check_equal("M(a,O)^2 = M(a,0)*M(a,2O)", M * M, M0 * chi3_monodromy(2)));

    {
        IdentityCheck c;
        c.name = "det M = -1";
        RatFun2 det = M.determinant();
        c.holds = det == RatFun2::constant(Rat(-1));
        if (!c.holds) c.witness = "det = " + det.str();
        rep.identities.push_back(c);
    }
    rep.identities.push_back(check_equal("M(a,0)^2 = Id", M0 * M0, Id));

    // literal power statement M^N = M(a, N*O)
    SymbolicMatrix p = M;
    for (int N = 1; N <= 6; ++N) {
        if (N > 1) p = p * M;
        if (p == chi3_monodromy(N)) rep.power_identity_holds_for.push_back(N);
    }
    return rep;
}

// ---------------------------------------------------------------------

std::vector<std::string> c014_basis_names() {
    return {"one", "pi", "pi2", "inv_pi", "inv_pi2", "sqrt3_over_pi", "pi_sqrt3", "I3plus"};
}

std::vector<std::vector<std::vector<Rat>>> c014_exact() {
    // coefficients over {1, pi, pi^2, 1/pi, 1/pi^2, sqrt(3)/pi, pi sqrt(3), I3plus}
    auto z = []() { return std::vector<Rat>(8, Rat(0)); };
    std::vector<std::vector<std::vector<Rat>>> m(6, std::vector<std::vector<Rat>>(6));
    for (auto& row : m)
        for (auto& cell : row) cell = z();

    auto one = [&](size_t i, size_t j, Rat v) { m[i][j][0] = v; };
    auto pi2 = [&](size_t i, size_t j, Rat v) { m[i][j][2] = v; };
    auto invpi2 = [&](size_t i, size_t j, Rat v) { m[i][j][4] = v; };
    auto s3pi = [&](size_t i, size_t j, Rat v) { m[i][j][5] = v; };
    auto pis3 = [&](size_t i, size_t j, Rat v) { m[i][j][6] = v; };
    auto i3 = [&](size_t i, size_t j, Rat v) { m[i][j][7] = v; };

    one(0, 0, Rat(1));

    one(1, 0, Rat(1));
    s3pi(1, 2, Rat(-9, 64));

    pis3(2, 1, Rat(-3, 32));

    one(3, 0, Rat(5));
    one(3, 1, Rat(1, 3));
    i3(3, 1, Rat(-2));
    s3pi(3, 2, Rat(3, 64));
    invpi2(3, 5, Rat(1, 16));

    one(4, 0, Rat(-5, 4));
    pis3(4, 1, Rat(-3, 32));
    s3pi(4, 2, Rat(45, 256));
    one(4, 4, Rat(1, 32));

    one(5, 0, Rat(29, 16));
    pi2(5, 0, Rat(-2, 3));
    pis3(5, 1, Rat(15, 64));
    s3pi(5, 2, Rat(-225, 1024));
    pis3(5, 2, Rat(-3, 64));
    pi2(5, 3, Rat(1, 64));

    return m;
}

CMatrix c014_numeric(long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    BigFloat pi = const_pi(bits);
    BigFloat s3 = sqrt(BigFloat(3L, bits));
    BigFloat one(1L, bits);
    std::vector<BigFloat> basis{one,
                                pi,
                                pi * pi,
                                one / pi,
                                one / (pi * pi),
                                s3 / pi,
                                pi * s3,
                                constants::i3_plus(digits + 10)};
    auto exact = c014_exact();
    CMatrix M(6, 6, bits);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            BigFloat acc(bits);
            for (size_t k = 0; k < basis.size(); ++k)
                if (exact[i][j][k] != 0) acc += BigFloat(exact[i][j][k], bits) * basis[k];
            M.at(i, j) = BigComplex(acc, BigFloat(bits));
        }
    return M;
}

}  // namespace fixtures
}  // namespace fuchs
