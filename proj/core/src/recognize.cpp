#include "fuchs/recognize.hpp"

#include "fuchs/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fuchs {
namespace recognize {

namespace {

struct Mat {
    size_t r, c;
    std::vector<BigFloat> d;
    Mat(size_t rows, size_t cols, mpfr_prec_t bits) : r(rows), c(cols), d(rows * cols, BigFloat(bits)) {}
    BigFloat& at(size_t i, size_t j) { return d[i * c + j]; }
    const BigFloat& at(size_t i, size_t j) const { return d[i * c + j]; }
};

Int round_bf(const BigFloat& x) { return round_to_int(x); }

}  // namespace

std::optional<std::vector<Int>> pslq(const std::vector<BigFloat>& v, long digits) {
    const size_t n = v.size();
    if (n < 2 || n > 12) throw std::invalid_argument("pslq: need 2..12 inputs");
    if (digits < 30) throw std::invalid_argument("insufficient precision");
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    const BigFloat eps = pow10(-static_cast<long>(0.9 * digits), bits);
    const BigFloat found_eps = pow10(-(digits / 2), bits);
    const Int coeff_bound = [&] {
        Int b(10);
        mpz_pow_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(digits / 4));
        return b;
    }();

    // init: normalized y, lower trapezoidal H, integer B
    std::vector<BigFloat> y(n, BigFloat(bits)), s(n, BigFloat(bits));
    {
        BigFloat t(bits);
        for (size_t i = n; i-- > 0;) {
            t += v[i] * v[i];
            s[i] = sqrt(t);
        }
        const BigFloat inv = BigFloat(1L, bits) / s[0];
        for (size_t i = 0; i < n; ++i) {
            y[i] = v[i] * inv;
            s[i] *= inv;
        }
    }
    Mat H(n, n - 1, bits);
    for (size_t j = 0; j + 1 < n; ++j) {
        H.at(j, j) = s[j + 1] / s[j];
        BigFloat t = y[j] / (s[j] * s[j + 1]);
        for (size_t i = j + 1; i < n; ++i) H.at(i, j) = -y[i] * t;
    }
    std::vector<std::vector<Int>> B(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) B[i][i] = 1;

    auto reduce_row = [&](size_t i, size_t jstart) {
        for (size_t j = std::min(jstart, i - 1) + 1; j-- > 0;) {
            if (H.at(j, j).is_zero()) continue;
            Int t = round_bf(H.at(i, j) / H.at(j, j));
            if (t == 0) continue;
            BigFloat tf(t, bits);
            y[j] += tf * y[i];
            for (size_t k = 0; k < n; ++k) B[k][j] += t * B[k][i];
            for (size_t k = 0; k <= j; ++k) H.at(i, k) -= tf * H.at(j, k);
        }
    };

    for (size_t i = 1; i < n; ++i) reduce_row(i, i - 1);

    const double gamma = std::sqrt(4.0 / 3.0) + 1e-9;
    const long max_iter = 300 * static_cast<long>(n) * digits;
    for (long iter = 0; iter < max_iter; ++iter) {
        // check for a relation
        for (size_t i = 0; i < n; ++i)
            if (abs(y[i]) < found_eps) {
                std::vector<Int> rel(n);
                bool ok = false, small = true;
                for (size_t k = 0; k < n; ++k) {
                    rel[k] = B[k][i];
                    if (rel[k] != 0) ok = true;
                    if (abs(rel[k]) > coeff_bound) small = false;
                }
                if (!ok) continue;
                if (!small) return std::nullopt;
                // guard against a roundoff-driven dip: the relation must
                // reproduce the stated residual bound on the raw inputs
                BigFloat resid(bits);
                for (size_t k = 0; k < n; ++k)
                    resid += BigFloat(rel[k], bits) * v[k];
                if (abs(resid) < found_eps) return rel;
                return std::nullopt;
            }

        // pick the row maximizing gamma^i |h_ii|
        size_t im = 0;
        {
            BigFloat best(bits);
            double g = gamma;
            for (size_t i = 0; i + 1 < n; ++i, g *= gamma) {
                BigFloat t = BigFloat(g, bits) * abs(H.at(i, i));
                if (t > best) {
                    best = t;
                    im = i;
                }
            }
            if (best < eps) return std::nullopt;  // precision exhausted
        }
        const size_t im1 = im + 1;
        std::swap(y[im], y[im1]);
        for (size_t k = 0; k + 1 < n; ++k) std::swap(H.at(im, k), H.at(im1, k));
        for (size_t k = 0; k < n; ++k) std::swap(B[k][im], B[k][im1]);

        if (im + 3 <= n) {
            // restore lower-trapezoidal form with a Givens rotation
            BigFloat t1 = H.at(im, im), t2 = H.at(im, im1);
            BigFloat norm = sqrt(t1 * t1 + t2 * t2);
            if (!norm.is_zero()) {
                BigFloat c = t1 / norm, sn = t2 / norm;
                for (size_t i = im; i < n; ++i) {
                    BigFloat a = H.at(i, im), b = H.at(i, im1);
                    H.at(i, im) = c * a + sn * b;
                    H.at(i, im1) = c * b - sn * a;
                }
            }
        }
        for (size_t i = im1; i < n; ++i) reduce_row(i, (i == im1) ? i - 1 : im1);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------

BigFloat ConstantBasis::eval_token(const std::string& name, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    BigFloat pi = const_pi(bits);
    if (name == "one") return BigFloat(1L, bits);
    if (name == "pi2") return pi * pi;
    if (name == "inv_pi") return BigFloat(1L, bits) / pi;
    if (name == "inv_pi2") return BigFloat(1L, bits) / (pi * pi);
    if (name == "sqrt3_over_pi") return sqrt(BigFloat(3L, bits)) / pi;
    if (name == "pi_sqrt3") return pi * sqrt(BigFloat(3L, bits));
    return constants::eval_constant(name, digits).re;  // pi, sqrt3, zeta3, I3plus, ...
}

std::vector<std::string> ConstantBasis::registry() {
    std::vector<std::string> r{"one", "pi2", "inv_pi", "inv_pi2", "sqrt3_over_pi", "pi_sqrt3"};
    for (const auto& n : constants::known_names()) r.push_back(n);
    return r;
}

ConstantBasis::ConstantBasis(std::vector<std::string> names, long digits)
    : names_(std::move(names)), digits_(digits) {
    if (names_.empty()) throw std::invalid_argument("ConstantBasis: empty");
    for (const auto& n : names_)
        evals_.push_back([n](long d) { return eval_token(n, d); });
    for (const auto& e : evals_) values_.push_back(e(digits));
    check_independence();
}

ConstantBasis::ConstantBasis(std::vector<std::string> names, std::vector<Evaluator> evals,
                             long digits)
    : names_(std::move(names)), evals_(std::move(evals)), digits_(digits) {
    if (names_.empty() || names_.size() != evals_.size())
        throw std::invalid_argument("ConstantBasis: names/evaluators mismatch");
    for (const auto& e : evals_) values_.push_back(e(digits));
    check_independence();
}

void ConstantBasis::check_independence() {
    if (names_.size() < 2) return;
    // basis independence: no small relation among the members themselves
    if (pslq(values_, std::min<long>(digits_, 80)))
        throw std::invalid_argument("ConstantBasis: members are rationally dependent");
}

std::vector<BigFloat> ConstantBasis::values_at(long digits) const {
    std::vector<BigFloat> out;
    for (const auto& e : evals_) out.push_back(e(digits));
    return out;
}

Recognition recognize_value(const BigComplex& x, const ConstantBasis& basis, long digits) {
    Recognition rec;
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    if (abs(x.im) > pow10(-(digits - 10), bits)) return rec;  // complex: unresolved
    if (abs(x.re) < pow10(-(digits - 10), bits)) {
        rec.resolved = true;
        rec.coeffs.assign(basis.names().size(), Rat(0));
        return rec;
    }

    std::vector<BigFloat> v{x.re};
    for (const auto& b : basis.values()) v.push_back(b);
    auto rel = pslq(v, digits);
    if (!rel) return rec;
    const Int& a0 = (*rel)[0];
    if (a0 == 0) return rec;  // relation among the basis alone: not a recognition

    Int den_bound(10);
    mpz_pow_ui(den_bound.get_mpz_t(), den_bound.get_mpz_t(),
               static_cast<unsigned long>(digits / 8));
    if (abs(a0) > den_bound) return rec;

    std::vector<Rat> coeffs;
    for (size_t i = 1; i < rel->size(); ++i) {
        Rat c(-(*rel)[i], a0);
        c.canonicalize();
        coeffs.push_back(c);
    }

    // re-verify at P+20 with freshly evaluated basis members
    auto hi = basis.values_at(digits + 20);
    BigFloat resid = x.re;
    const mpfr_prec_t hbits = bits_for_digits(digits + 30);
    resid = BigFloat::parse(x.re.str(digits + 5), digits + 30);
    for (size_t i = 0; i < coeffs.size(); ++i)
        resid -= BigFloat(coeffs[i], hbits) * hi[i];
    if (abs(resid) > pow10(-(digits / 2), hbits)) return rec;

    rec.resolved = true;
    rec.coeffs = std::move(coeffs);
    return rec;
}

MatrixRecognition recognize_matrix(const CMatrix& M, const ConstantBasis& basis, long digits) {
    MatrixRecognition out;
    out.cells.assign(M.rows(), std::vector<Recognition>(M.cols()));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) {
            out.cells[i][j] = recognize_value(M.at(i, j), basis, digits);
            if (!out.cells[i][j].resolved) out.unresolved.push_back({i, j});
        }
    return out;
}

std::string MatrixRecognition::render(const ConstantBasis& basis) const {
    std::ostringstream os;
    for (size_t i = 0; i < cells.size(); ++i) {
        os << "[";
        for (size_t j = 0; j < cells[i].size(); ++j) {
            if (j) os << ", ";
            const Recognition& r = cells[i][j];
            if (!r.resolved) {
                os << "?";
                continue;
            }
            bool any = false;
            for (size_t k = 0; k < r.coeffs.size(); ++k) {
                if (r.coeffs[k] == 0) continue;
                if (any) os << " + ";
                os << r.coeffs[k].get_str() << "*" << basis.names()[k];
                any = true;
            }
            if (!any) os << "0";
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace recognize
}  // namespace fuchs
