#include "fuchs/frobenius.hpp"

#include "fuchs/algebraic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fuchs {

LocalExpansion local_expansion(const std::vector<Poly>& b) {
    const size_t n = b.size() - 1;
    long mu = 0;
    bool have = false;
    for (size_t i = 0; i <= n; ++i) {
        long v = b[i].valuation();
        if (v < 0) continue;
        long off = v - static_cast<long>(i);
        if (!have || off < mu) { mu = off; have = true; }
    }
    if (!have) throw std::invalid_argument("local_expansion: zero operator");
    long dmax = 0;
    for (size_t i = 0; i <= n; ++i)
        if (!b[i].is_zero())
            dmax = std::max(dmax, b[i].degree() - static_cast<long>(i) - mu);

    LocalExpansion out;
    out.mu = mu;
    out.g.assign(dmax + 1, Poly{});
    for (size_t i = 0; i <= n; ++i) {
        if (b[i].is_zero()) continue;
        Poly ff = falling_factorial(static_cast<unsigned>(i));
        for (long d = 0; d <= dmax; ++d) {
            long m = d + mu + static_cast<long>(i);
            if (m < 0 || m > b[i].degree()) continue;
            Rat c = b[i].coeff(static_cast<size_t>(m));
            if (c == 0) continue;
            out.g[d] = out.g[d] + c * ff;
        }
    }
    return out;
}

namespace {

// Coefficient state for one congruence class: c[k][j] is a vector of
// rationals over the free parameters introduced at the resonances.
struct ClassState {
    Rat rho_min;
    std::vector<std::pair<long, unsigned>> roots;  // (offset, multiplicity), ascending
    size_t nparams = 0;
    // c[k][j][lambda]
    std::vector<std::vector<std::vector<Rat>>> c;
    // pivot (offset, log) per parameter, in introduction order
    std::vector<std::pair<long, unsigned>> pivots;
};

Rat frac_part(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    Rat f = r - Rat(fl);
    f.canonicalize();
    return f;
}

long binom_l(unsigned n, unsigned k) {
    if (k > n) return 0;
    long r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * static_cast<long>(n - i) / static_cast<long>(i + 1);
    return r;
}

}  // namespace

LocalBasis local_basis(const FuchsianODE& ode, const LocalPoint& p, long T) {
    if (p.infinite) {
        FuchsianODE inf = ode.at_infinity();
        LocalBasis basis = local_basis(inf, LocalPoint::at(Rat(0)), T);
        basis.point = LocalPoint::infinity();
        // radius in t of the transformed equation is already correct:
        // the nearest finite singularity of the t-equation.
        return basis;
    }
    if (T < 1) throw std::invalid_argument("local_basis: T must be >= 1");
    const unsigned n = ode.order();
    LocalExpansion ex = local_expansion(ode.shifted_coeffs(p.value));
    if (ex.g[0].degree() != static_cast<long>(n))
        throw std::domain_error("local_basis: irregular singular point");

    // indicial roots, grouped by congruence class mod 1
    Poly g0 = ex.g[0];
    std::vector<std::pair<Rat, unsigned>> roots;
    {
        Poly work = g0;
        for (const auto& [r, mult] : rational_roots(g0)) {
            roots.push_back({r, mult});
            for (unsigned t = 0; t < mult; ++t)
                work = Poly::div_exact(work, Poly{Rat(-r.get_num()), Rat(r.get_den())});
        }
        if (work.degree() > 0)
            throw std::domain_error(
                "local_basis: non-rational indicial exponents (exact Frobenius unavailable)");
    }

    std::map<Rat, std::vector<std::pair<Rat, unsigned>>> classes;
    for (const auto& rm : roots) classes[frac_part(rm.first)].push_back(rm);

    long maxgap = 0;
    for (auto& [f, rs] : classes) {
        std::sort(rs.begin(), rs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Rat gap = rs.back().first - rs.front().first;
        maxgap = std::max(maxgap, static_cast<long>(gap.get_num().get_si()));
    }
    if (T < maxgap) throw std::invalid_argument("T too small");

    // derivative tables for every g_d up to the largest possible log order
    size_t Lcap = 0;
    for (auto& [f, rs] : classes) {
        size_t N = 0;
        for (auto& rm : rs) N += rm.second;
        Lcap = std::max(Lcap, N);
    }
    const long D = static_cast<long>(ex.g.size()) - 1;
    std::vector<std::vector<Poly>> gder(ex.g.size());
    for (size_t d = 0; d < ex.g.size(); ++d) {
        gder[d].push_back(ex.g[d]);
        for (size_t r = 1; r <= Lcap; ++r) gder[d].push_back(gder[d][r - 1].derivative());
    }

    std::vector<LocalSolution> all;
    for (auto& [f, rs] : classes) {
        ClassState st;
        st.rho_min = rs.front().first;
        size_t N = 0;
        for (auto& [r, mult] : rs) {
            Rat off = r - st.rho_min;
            st.roots.push_back({static_cast<long>(off.get_num().get_si()), mult});
            N += mult;
        }
        const unsigned L = static_cast<unsigned>(N - 1);  // max log power
        st.c.assign(T + 1, std::vector<std::vector<Rat>>(L + 1, std::vector<Rat>(N, Rat(0))));

        auto g_eval = [&](long d, unsigned r, const Rat& s) { return gder[d][r].eval(s); };

        for (long m = 0; m <= T; ++m) {
            const Rat sigma = st.rho_min + Rat(m);
            // RHS[t][lambda]
            std::vector<std::vector<Rat>> R(L + 1, std::vector<Rat>(N, Rat(0)));
            for (long d = 1; d <= std::min<long>(D, m); ++d) {
                const Rat arg = st.rho_min + Rat(m - d);
                for (unsigned t = 0; t <= L; ++t)
                    for (unsigned j = t; j <= L; ++j) {
                        Rat gv = Rat(binom_l(j, t)) * g_eval(d, j - t, arg);
                        if (gv == 0) continue;
                        for (size_t l = 0; l < N; ++l) {
                            const Rat& cv = st.c[m - d][j][l];
                            if (cv != 0) R[t][l] -= gv * cv;
                        }
                    }
            }
            unsigned mult = 0;
            for (auto& [off, mu] : st.roots)
                if (off == m) mult = mu;

            auto& X = st.c[m];
            if (mult == 0) {
                const Rat g00 = g_eval(0, 0, sigma);
                for (long t = L; t >= 0; --t) {
                    std::vector<Rat> acc = R[t];
                    for (unsigned j = t + 1; j <= L; ++j) {
                        Rat gv = Rat(binom_l(j, t)) * g_eval(0, j - t, sigma);
                        if (gv == 0) continue;
                        for (size_t l = 0; l < N; ++l)
                            if (X[j][l] != 0) acc[l] -= gv * X[j][l];
                    }
                    for (size_t l = 0; l < N; ++l) X[t][l] = acc[l] / g00;
                }
            } else {
                // g_0 vanishes to order `mult` at sigma: columns j < mult are
                // kernel directions, rows t > L - mult must be consistent.
                for (long t = static_cast<long>(L); t > static_cast<long>(L) - static_cast<long>(mult); --t)
                    for (size_t l = 0; l < N; ++l)
                        if (R[t][l] != 0)
                            throw std::logic_error("local_basis: inconsistent resonance system");
                for (long j = static_cast<long>(L); j >= static_cast<long>(mult); --j) {
                    const unsigned t = static_cast<unsigned>(j) - mult;
                    std::vector<Rat> acc = R[t];
                    for (unsigned j2 = j + 1; j2 <= L; ++j2) {
                        Rat gv = Rat(binom_l(j2, t)) * g_eval(0, j2 - t, sigma);
                        if (gv == 0) continue;
                        for (size_t l = 0; l < N; ++l)
                            if (X[j2][l] != 0) acc[l] -= gv * X[j2][l];
                    }
                    Rat diag = Rat(binom_l(j, t)) * g_eval(0, mult, sigma);
                    for (size_t l = 0; l < N; ++l) X[j][l] = acc[l] / diag;
                }
                for (unsigned i = 0; i < mult; ++i) {
                    X[i][st.nparams] = Rat(1);
                    st.pivots.push_back({m, i});
                    ++st.nparams;
                }
            }
        }
        if (st.nparams != N) throw std::logic_error("local_basis: wrong parameter count");

        // extract one solution per parameter and echelon-reduce
        struct RawSol {
            long m0;
            unsigned j0;
            std::vector<std::vector<Rat>> table;  // [k][j] from its own head order
        };
        std::vector<RawSol> sols(N);
        for (size_t l = 0; l < N; ++l) {
            const auto [m0, j0] = st.pivots[l];
            RawSol s;
            s.m0 = m0;
            s.j0 = j0;
            s.table.assign(T - m0 + 1, std::vector<Rat>(L + 1, Rat(0)));
            for (long k = m0; k <= T; ++k)
                for (unsigned j = 0; j <= L; ++j) s.table[k - m0][j] = st.c[k][j][l];
            sols[l] = std::move(s);
        }
        // pivots are introduced in ascending (m, j) order already;
        // reduce each solution against the later ones (Gauss-Jordan).
        for (size_t i = N; i-- > 0;) {
            for (size_t l = i + 1; l < N; ++l) {
                const long dm = sols[l].m0 - sols[i].m0;
                Rat factor = (dm <= static_cast<long>(sols[i].table.size()) - 1)
                                 ? sols[i].table[dm][sols[l].j0]
                                 : Rat(0);
                if (factor == 0) continue;
                for (size_t k = 0; k + dm < sols[i].table.size(); ++k)
                    for (unsigned j = 0; j <= L; ++j)
                        sols[i].table[k + dm][j] -= factor * sols[l].table[k][j];
            }
        }

        for (auto& s : sols) {
            LocalSolution out;
            out.exponent = st.rho_min + Rat(s.m0);
            out.head_log = s.j0;
            out.truncation = T - s.m0;
            unsigned maxlog = 0;
            for (auto& row : s.table)
                for (unsigned j = 0; j <= L; ++j)
                    if (row[j] != 0) maxlog = std::max(maxlog, j);
            out.log_degree = maxlog;
            out.table.assign(s.table.size(), {});
            for (size_t k = 0; k < s.table.size(); ++k) {
                out.table[k].assign(maxlog + 1, Rat(0));
                for (unsigned j = 0; j <= maxlog; ++j) out.table[k][j] = s.table[k][j];
            }
            all.push_back(std::move(out));
        }
    }

    std::sort(all.begin(), all.end(), [](const LocalSolution& a, const LocalSolution& b) {
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return a.head_log < b.head_log;
    });

    LocalBasis basis;
    basis.point = p;
    basis.order = n;
    basis.solutions = std::move(all);
    basis.truncation = T;
    // radius: distance to the nearest other root of the leading coefficient
    const mpfr_prec_t bits = bits_for_digits(50);
    BigFloat best(bits);
    bool have = false;
    BigComplex here(p.value, bits);
    for (const BigComplex& r : complex_roots(ode.leading().squarefree_part(), 40)) {
        BigFloat d = abs(r - here);
        if (d < pow10(-35, bits)) continue;  // that's p itself
        if (!have || d < best) { best = d; have = true; }
    }
    basis.radius = have ? best : BigFloat(1e30, bits);
    return basis;
}

// ---------------------------------------------------------------------

namespace {

// d/dx of a log-series table at exponent rho: the exponent drops by one.
void differentiate_table(std::vector<std::vector<Rat>>& t, Rat& rho) {
    for (size_t k = 0; k < t.size(); ++k) {
        const unsigned L = static_cast<unsigned>(t[k].size());
        std::vector<Rat> row(L, Rat(0));
        for (unsigned j = 0; j < L; ++j) {
            row[j] += (rho + Rat(static_cast<long>(k))) * t[k][j];
            if (j + 1 < L) row[j] += Rat(static_cast<long>(j + 1)) * t[k][j + 1];
        }
        t[k] = std::move(row);
    }
    rho -= 1;
}

}  // namespace

BasisEvaluation evaluate_basis(const LocalBasis& basis, const BigComplex& w, long digits) {
    return evaluate_basis(basis, w, digits, BigComplex(1L, bits_for_digits(digits + 15)));
}

BasisEvaluation evaluate_basis(const LocalBasis& basis, const BigComplex& w,
                               long digits, const BigComplex& direction) {
    const unsigned n = basis.order;
    const mpfr_prec_t bits = bits_for_digits(digits + 15);

    BigComplex x(bits);
    if (basis.point.infinite) {
        x = BigComplex(1L, bits) / w;
    } else {
        x = w - BigComplex(basis.point.value, bits);
    }
    BigFloat ax = abs(x);
    if (!(ax < basis.radius))
        throw std::domain_error("evaluate_basis: point outside the disk of convergence");

    // Branch convention: the solution is realized as
    //   (x/u)^rho * sum_k c[k][j] x^k * Log(x/u)^j,   u = direction,
    // a constant recombination of the formal solution that is real along the
    // approach segment. The head and the logs live in the rotated coordinate
    // v = x/u (principal branches there put the cut opposite the approach
    // ray); the power series stays in literal x. Each x-derivative scales
    // the head chain by 1/u.
    const BigComplex udir = direction / BigComplex(abs(direction), BigFloat(bits));
    const BigComplex uinv = conj(udir);
    const BigComplex v = x * uinv;
    const BigComplex lnv = log(v);
    const BigComplex one_c(1L, bits);
    BigFloat tail_worst(bits);

    // jets in the local coordinate first
    CMatrix local(basis.solutions.size(), n, bits);
    for (size_t i = 0; i < basis.solutions.size(); ++i) {
        std::vector<std::vector<Rat>> table = basis.solutions[i].table;
        Rat rho = basis.solutions[i].exponent;
        BigComplex dscale(1L, bits);
        for (unsigned d = 0; d < n; ++d) {
            if (d > 0) {
                differentiate_table(table, rho);
                dscale *= uinv;
            }
            // Horner per log power
            const unsigned L = table.empty() ? 0 : static_cast<unsigned>(table[0].size()) - 1;
            BigComplex sum(bits);
            BigComplex lnp(1L, bits);
            for (unsigned j = 0; j <= L; ++j) {
                BigComplex acc(bits);
                for (size_t k = table.size(); k-- > 0;)
                    acc = acc * x + BigComplex(table[k][j], bits);
                sum += acc * lnp;
                lnp *= lnv;
            }
            local.at(i, d) = dscale * pow_rat_dir(v, rho, one_c) * sum;

            // geometric tail estimate: each of the last 10 terms extrapolated
            // past the truncation with ratio |x|/radius, 10-digit guard band
            if (d == 0 && table.size() >= 4) {
                const size_t kT = table.size() - 1;
                const size_t k0 = kT >= 10 ? kT - 9 : 0;
                BigFloat q = ax / basis.radius;
                BigFloat head(bits);
                for (size_t k = k0; k <= kT; ++k) {
                    BigFloat mag(bits);
                    for (unsigned j = 0; j < table[k].size(); ++j)
                        mag += abs(BigComplex(table[k][j], bits));
                    if (mag.is_zero()) continue;
                    mag = mag * pow(ax, BigFloat(static_cast<long>(k), bits)) *
                          pow(q, BigFloat(static_cast<long>(kT - k), bits));
                    if (mag > head) head = mag;
                }
                BigFloat tail = head * q / (BigFloat(1L, bits) - q) * pow10(10, bits);
                if (tail > tail_worst) tail_worst = tail;
            }
        }
    }

    if (tail_worst > pow10(-digits, bits))
        throw std::runtime_error("precision unreachable at this point");

    BasisEvaluation out;
    out.tail = tail_worst;
    if (!basis.point.infinite) {
        out.jets = std::move(local);
        return out;
    }

    // infinity frame: convert t-jets to w-jets with D_w = -t^2 D_t
    // (d/dw)^k = sum_j c_{k,j}(t) (d/dt)^j
    std::vector<std::vector<Poly>> conv(n, std::vector<Poly>(n));
    conv[0][0] = Poly::constant(Rat(1));
    const Poly mt2({Rat(0), Rat(0), Rat(-1)});
    for (unsigned k = 0; k + 1 < n; ++k)
        for (unsigned j = 0; j <= k + 1; ++j) {
            Poly t = conv[k][j].derivative();
            if (j > 0) t = t + conv[k][j - 1];
            conv[k + 1][j] = mt2 * t;
        }
    CMatrix jets(basis.solutions.size(), n, bits);
    for (size_t i = 0; i < basis.solutions.size(); ++i)
        for (unsigned k = 0; k < n; ++k) {
            BigComplex acc(bits);
            for (unsigned j = 0; j <= k; ++j) {
                if (conv[k][j].is_zero()) continue;
                acc += conv[k][j].eval(x) * local.at(i, j);
            }
            jets.at(i, k) = acc;
        }
    out.jets = std::move(jets);
    return out;
}

// ---------------------------------------------------------------------

LocalMonodromy local_monodromy(const LocalBasis& basis) {
    LocalMonodromy mon;
    mon.dim = basis.solutions.size();

    // group members by exponent class mod 1
    std::map<Rat, std::vector<size_t>> classes;
    for (size_t i = 0; i < basis.solutions.size(); ++i) {
        Rat r = basis.solutions[i].exponent;
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
        Rat f = r - Rat(fl);
        f.canonicalize();
        classes[f].push_back(i);
    }

    for (auto& [f, members] : classes) {
        LocalMonodromy::Block blk;
        blk.class_exponent = f;
        blk.zeta_num = f.get_num().get_si();
        blk.zeta_den = f.get_den().get_si();
        blk.members = members;
        const size_t m = members.size();
        blk.unipotent.assign(m, std::vector<Poly>(m));
        for (size_t a = 0; a < m; ++a) {
            const LocalSolution& S = basis.solutions[members[a]];
            for (size_t b = 0; b < m; ++b) {
                const LocalSolution& P = basis.solutions[members[b]];
                Rat off_r = P.exponent - S.exponent;
                if (off_r.get_den() != 1) throw std::logic_error("local_monodromy: class mix-up");
                long off = off_r.get_num().get_si();
                // coefficient of the continued S at pivot (P.exponent, P.head_log):
                // sum_{j >= j0} binom(j, j0) Omega^{j-j0} c[off][j]
                Poly entry;
                if (off >= 0 && off <= static_cast<long>(S.table.size()) - 1) {
                    const unsigned j0 = P.head_log;
                    for (unsigned j = j0; j < S.table[off].size(); ++j) {
                        Rat cv = S.table[off][j];
                        if (cv == 0) continue;
                        entry = entry + Poly::monomial(Rat(binom_l(j, j0)) * cv, j - j0);
                    }
                }
                blk.unipotent[a][b] = entry;
            }
        }
        mon.blocks.push_back(std::move(blk));
    }
    return mon;
}

CMatrix LocalMonodromy::numeric(long digits) const {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    BigComplex omega(BigFloat(bits), BigFloat(2L, bits) * const_pi(bits));
    return numeric_at(omega, digits);
}

CMatrix LocalMonodromy::numeric_at(const BigComplex& omega, long digits) const {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    CMatrix M(dim, dim, bits);
    for (const Block& blk : blocks) {
        // semisimple factor at the physical loop: e^{2 pi i rho}
        BigComplex zeta = unit_root(Rat(blk.zeta_num, blk.zeta_den), bits);
        for (size_t a = 0; a < blk.members.size(); ++a)
            for (size_t b = 0; b < blk.members.size(); ++b) {
                const Poly& e = blk.unipotent[a][b];
                if (e.is_zero()) continue;
                BigComplex acc(bits);
                for (size_t k = e.coeffs().size(); k-- > 0;)
                    acc = acc * omega + BigComplex(e.coeff(k), bits);
                M.at(blk.members[a], blk.members[b]) = zeta * acc;
            }
    }
    return M;
}

std::vector<std::vector<Poly>> LocalMonodromy::symbolic(std::vector<int>* signs_out) const {
    std::vector<std::vector<Poly>> M(dim, std::vector<Poly>(dim));
    if (signs_out) signs_out->assign(dim, 1);
    for (const Block& blk : blocks) {
        if (blk.zeta_den != 1 && blk.zeta_den != 2)
            throw std::domain_error(
                "local_monodromy: semisimple factor is an irrational root of unity; use numeric mode");
        const int sign = (blk.zeta_den == 2) ? -1 : 1;
        for (size_t a = 0; a < blk.members.size(); ++a) {
            if (signs_out) (*signs_out)[blk.members[a]] = sign;
            for (size_t b = 0; b < blk.members.size(); ++b)
                M[blk.members[a]][blk.members[b]] =
                    Rat(sign) * blk.unipotent[a][b];
        }
    }
    return M;
}

bool LocalMonodromy::is_identity() const {
    for (const Block& blk : blocks) {
        if (blk.zeta_den != 1) return false;
        for (size_t a = 0; a < blk.members.size(); ++a)
            for (size_t b = 0; b < blk.members.size(); ++b) {
                const Poly& e = blk.unipotent[a][b];
                if (a == b) {
                    if (!(e == Poly{Rat(1)})) return false;
                } else if (!e.is_zero()) {
                    return false;
                }
            }
    }
    return true;
}

}  // namespace fuchs
