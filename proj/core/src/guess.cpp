#include "fuchs/guess.hpp"

#include "fuchs/linalg.hpp"
#include "fuchs/modular.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fuchs {
namespace guess {

SeriesData load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open series file: " + path);
    SeriesData s;
    s.origin = path;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string ks, qs;
        if (!(ls >> ks)) continue;  // blank line
        if (ks[0] == '#') continue;
        if (!(ls >> qs)) {
            std::ostringstream os;
            os << "series file " << path << ": line " << lineno << ": expected 'k p/q'";
            throw std::runtime_error(os.str());
        }
        long k;
        try {
            k = std::stol(ks);
        } catch (...) {
            std::ostringstream os;
            os << "series file " << path << ": line " << lineno << ": bad index " << ks;
            throw std::runtime_error(os.str());
        }
        if (k < 0) {
            std::ostringstream os;
            os << "series file " << path << ": line " << lineno << ": negative index";
            throw std::runtime_error(os.str());
        }
        Rat q;
        try {
            q = rat_from_string(qs);
        } catch (...) {
            std::ostringstream os;
            os << "series file " << path << ": line " << lineno << ": bad rational " << qs;
            throw std::runtime_error(os.str());
        }
        if (static_cast<size_t>(k) >= s.coefficients.size())
            s.coefficients.resize(k + 1, Rat(0));
        s.coefficients[k] = q;
    }
    if (s.coefficients.size() < 2)
        throw std::runtime_error("series file " + path + ": need at least two coefficients");
    return s;
}

void save_series(const SeriesData& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write series file: " + path);
    for (size_t k = 0; k < s.coefficients.size(); ++k)
        out << k << " " << s.coefficients[k].get_str() << "\n";
}

namespace {

std::vector<Rat> derivative_series(const std::vector<Rat>& c) {
    if (c.size() <= 1) return {};
    std::vector<Rat> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c[k];
    return d;
}

// columns indexed by (i, j) -> p_{i,j}: coefficient of w^m is deriv_i[m - j]
struct ShapeSystem {
    unsigned r, d;
    size_t rows, cols;
    // entry accessor into the exact matrix
    std::vector<std::vector<Rat>> M;
};

ShapeSystem build_system(const std::vector<std::vector<Rat>>& derivs, unsigned r, unsigned d,
                         size_t rows) {
    ShapeSystem sys;
    sys.r = r;
    sys.d = d;
    sys.rows = rows;
    sys.cols = static_cast<size_t>(r + 1) * (d + 1);
    sys.M.assign(rows, std::vector<Rat>(sys.cols, Rat(0)));
    for (unsigned i = 0; i <= r; ++i)
        for (unsigned j = 0; j <= d; ++j) {
            size_t col = static_cast<size_t>(i) * (d + 1) + j;
            const auto& di = derivs[i];
            for (size_t m = j; m < rows; ++m) {
                size_t k = m - j;
                if (k < di.size() && di[k] != 0) sys.M[m][col] = di[k];
            }
        }
    return sys;
}

// nullspace dimension and (when 1) the normalized vector mod p
struct ModNull {
    long dim = 0;
    std::vector<uint64_t> vec;  // normalized: first nonzero = 1
    bool bad_prime = false;
};

ModNull modular_nullspace(const ShapeSystem& sys, uint64_t prime) {
    PrimeField F(prime);
    ModNull out;
    const size_t rows = sys.rows, cols = sys.cols;
    std::vector<std::vector<uint64_t>> A(rows, std::vector<uint64_t>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            const Rat& q = sys.M[i][j];
            if (q == 0) continue;
            try {
                A[i][j] = F.from_rat(q);
            } catch (const std::domain_error&) {
                out.bad_prime = true;
                return out;
            }
        }
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t sel = rank;
        while (sel < rows && A[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[rank], A[sel]);
        uint64_t inv = F.inv(A[rank][c]);
        for (size_t j = c; j < cols; ++j) A[rank][j] = F.mul(A[rank][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][c] == 0) continue;
            uint64_t f = A[i][c];
            for (size_t j = c; j < cols; ++j)
                A[i][j] = F.sub(A[i][j], F.mul(f, A[rank][j]));
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }
    out.dim = static_cast<long>(cols - rank);
    if (out.dim == 1) {
        size_t free_col = 0;
        while (free_col < cols && pivot_of_col[free_col] >= 0) ++free_col;
        std::vector<uint64_t> v(cols, 0);
        v[free_col] = 1;
        for (size_t c = 0; c < cols; ++c) {
            long pr = pivot_of_col[c];
            if (pr < 0) continue;
            // reduced echelon row pr: x_c + A[pr][free] * x_free = 0
            v[c] = F.sub(0, A[pr][free_col]);
        }
        // normalize so the first nonzero entry is 1
        size_t fn = 0;
        while (fn < cols && v[fn] == 0) ++fn;
        if (fn < cols) {
            uint64_t inv = F.inv(v[fn]);
            for (auto& x : v) x = F.mul(x, inv);
        }
        out.vec = std::move(v);
    }
    return out;
}

std::optional<FuchsianODE> vector_to_ode(const QVec& v, unsigned r, unsigned d) {
    std::vector<Poly> ps;
    for (unsigned i = 0; i <= r; ++i) {
        std::vector<Rat> c(v.begin() + static_cast<long>(i) * (d + 1),
                           v.begin() + static_cast<long>(i + 1) * (d + 1));
        ps.emplace_back(std::move(c));
    }
    while (!ps.empty() && ps.back().is_zero()) ps.pop_back();
    if (ps.size() < 2) return std::nullopt;  // degenerate relation, no derivative at all
    return FuchsianODE(std::move(ps));
}

}  // namespace

long verify_annihilation(const FuchsianODE& ode, const SeriesData& s) {
    std::vector<Rat> res = ode.apply_to_series(s.coefficients);
    long M = -1;
    for (size_t k = 0; k < res.size(); ++k) {
        if (res[k] != 0) break;
        M = static_cast<long>(k);
    }
    return M;
}

std::optional<GuessResult> guess_ode(const SeriesData& s, const GuessOptions& opt) {
    const long N = s.top_index();
    if (N < 3) throw std::invalid_argument("guess_ode: series too short");

    // precompute derivative series once
    std::vector<std::vector<Rat>> derivs{s.coefficients};
    for (unsigned i = 1; i <= opt.max_order; ++i)
        derivs.push_back(derivative_series(derivs.back()));

    // shape scan: ascending unknown count, ties to smaller order
    std::vector<std::pair<unsigned, unsigned>> shapes;
    for (unsigned r = 1; r <= opt.max_order; ++r)
        for (unsigned d = 0; d <= opt.max_degree; ++d) shapes.push_back({r, d});
    std::sort(shapes.begin(), shapes.end(), [](auto a, auto b) {
        size_t ua = static_cast<size_t>(a.first + 1) * (a.second + 1);
        size_t ub = static_cast<size_t>(b.first + 1) * (b.second + 1);
        if (ua != ub) return ua < ub;
        return a.first < b.first;
    });

    for (auto [r, d] : shapes) {
        const size_t unknowns = static_cast<size_t>(r + 1) * (d + 1);
        if (static_cast<size_t>(N) < unknowns + opt.holdout) continue;
        const size_t rows = static_cast<size_t>(
            std::min<long>(N - static_cast<long>(opt.holdout), N - static_cast<long>(r)) + 1);
        if (rows < unknowns) continue;
        ShapeSystem sys = build_system(derivs, r, d, rows);
        const size_t all_rows = static_cast<size_t>(N - static_cast<long>(r) + 1);

        QVec candidate;
        long dim = 0;
        if (opt.method == Method::Exact) {
            auto basis = rational_nullspace(sys.M);
            dim = static_cast<long>(basis.size());
            if (dim > 1) {
                // ask the held-out coefficients to discriminate
                sys = build_system(derivs, r, d, all_rows);
                basis = rational_nullspace(sys.M);
                dim = static_cast<long>(basis.size());
            }
            if (dim == 1) candidate = basis[0];
        } else {
            auto primes = modular_primes(8);
            std::vector<uint64_t> used;
            std::vector<ModNull> nulls;
            long best_rank_dim = -1;
            size_t pi = 0;
            auto probe = [&](const ShapeSystem& ss) {
                used.clear();
                nulls.clear();
                best_rank_dim = -1;
                pi = 0;
                for (; pi < primes.size() && nulls.size() < 3; ++pi) {
                    ModNull mn = modular_nullspace(ss, primes[pi]);
                    if (mn.bad_prime) continue;
                    if (best_rank_dim < 0 || mn.dim < best_rank_dim) {
                        // smaller nullity = larger rank: previous primes were bad
                        best_rank_dim = mn.dim;
                        nulls.clear();
                        used.clear();
                    }
                    if (mn.dim == best_rank_dim) {
                        nulls.push_back(mn);
                        used.push_back(primes[pi]);
                    }
                }
            };
            probe(sys);
            if (best_rank_dim > 1) {
                // ask the held-out coefficients to discriminate
                sys = build_system(derivs, r, d, all_rows);
                probe(sys);
            }
            if (best_rank_dim < 0) continue;
            dim = best_rank_dim;
            if (dim == 1) {
                // CRT entrywise, then rational reconstruction
                bool ok = true;
                candidate.assign(sys.cols, Rat(0));
                size_t extra = pi;
                while (true) {
                    Int modulus;
                    std::vector<uint64_t> moduli = used;
                    ok = true;
                    for (size_t j = 0; j < sys.cols && ok; ++j) {
                        std::vector<uint64_t> res;
                        for (size_t t = 0; t < nulls.size(); ++t) res.push_back(nulls[t].vec[j]);
                        Int combined = crt_combine(res, moduli, &modulus);
                        Int bound;
                        mpz_sqrt(bound.get_mpz_t(), Int(modulus / 2).get_mpz_t());
                        auto rec = rational_reconstruct(combined, modulus, bound);
                        if (!rec) {
                            ok = false;
                            break;
                        }
                        candidate[j] = *rec;
                    }
                    if (ok) break;
                    // add another prime and retry
                    bool added = false;
                    while (extra < primes.size()) {
                        ModNull mn = modular_nullspace(sys, primes[extra]);
                        ++extra;
                        if (!mn.bad_prime && mn.dim == 1) {
                            nulls.push_back(mn);
                            used.push_back(primes[extra - 1]);
                            added = true;
                            break;
                        }
                    }
                    if (!added)
                        throw std::runtime_error(
                            "guess_ode: modular rational reconstruction failed");
                }
                candidate = canonicalize_vector(std::move(candidate));
            }
        }

        if (dim == 0) continue;
        if (dim > 1) throw std::runtime_error("need more terms");

        auto ode = vector_to_ode(candidate, r, d);
        if (!ode) continue;
        // exact verification including the held-out coefficients
        long through = verify_annihilation(*ode, s);
        if (through < N - static_cast<long>(ode->order())) continue;

        GuessResult out;
        out.order = ode->order();
        out.degree = 0;
        for (const Poly& p : ode->coeffs())
            out.degree = std::max<unsigned>(out.degree, static_cast<unsigned>(
                                                            std::max<long>(p.degree(), 0)));
        out.ode = std::move(*ode);
        out.verified_through = through;
        // minimal within budget iff every smaller order had all of its
        // term-feasible degrees scanned before this shape was reached
        out.minimal_order_certificate = true;
        const size_t found_unknowns = static_cast<size_t>(r + 1) * (d + 1);
        for (unsigned rp = 1; rp < out.order; ++rp) {
            long dcap = std::min<long>(opt.max_degree,
                                       (N - static_cast<long>(opt.holdout)) / (rp + 1) - 1);
            if (dcap < 0) continue;
            size_t feas = static_cast<size_t>(rp + 1) * (dcap + 1);
            if (feas > found_unknowns) out.minimal_order_certificate = false;
        }
        return out;
    }
    return std::nullopt;
}

}  // namespace guess
}  // namespace fuchs
