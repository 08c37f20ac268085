#include "fuchs/transport.hpp"

#include "fuchs/algebraic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fuchs {

namespace {

std::vector<BigComplex> complex_shift(const Poly& a, const BigComplex& z0, mpfr_prec_t bits) {
    std::vector<BigComplex> work;
    for (const Rat& c : a.coeffs()) work.emplace_back(c, bits);
    if (work.empty()) return work;
    for (size_t k = 0; k + 1 < work.size(); ++k)
        for (size_t i = work.size() - 1; i > k; --i)
            work[i - 1] += z0 * work[i];
    return work;
}

BigComplex unit(const BigComplex& z) { return z / BigComplex(abs(z), BigFloat(z.prec())); }

}  // namespace

BigFloat distance_to_singularities(const FuchsianODE& ode, const BigComplex& z, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    Poly sf = ode.leading().squarefree_part();
    BigFloat best(1e30, bits);
    for (const BigComplex& r : complex_roots(sf, digits)) {
        BigFloat d = abs(z - r);
        if (d < best) best = d;
    }
    return best;
}

BigFloat nearest_singularity_scale(const FuchsianODE& ode, long digits) {
    const mpfr_prec_t bits = bits_for_digits(digits + 10);
    Poly sf = ode.leading().squarefree_part();
    auto roots = complex_roots(sf, digits);
    if (roots.size() < 2) return BigFloat(1L, bits);
    BigFloat best(1e30, bits);
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            BigFloat d = abs(roots[i] - roots[j]);
            if (d < best) best = d;
        }
    return best;
}

NumericTaylor::NumericTaylor(const FuchsianODE& ode, const BigComplex& z0, long digits)
    : n_(ode.order()), bits_(bits_for_digits(digits + 15)) {
    for (const Poly& a : ode.coeffs()) b_.push_back(complex_shift(a, z0, bits_));
    // ordinary-point check: leading coefficient away from zero relative to scale
    BigFloat lead = abs(b_.back()[0]);
    BigFloat scale(bits_);
    for (const auto& bi : b_)
        for (const auto& c : bi) {
            BigFloat a = abs(c);
            if (a > scale) scale = a;
        }
    if (lead < scale * pow10(-(digits / 2), bits_))
        throw std::domain_error("NumericTaylor: center is (numerically) a singular point");
    radius_ = distance_to_singularities(ode, z0, 40);
    mu_ = -static_cast<long>(n_);
}

std::vector<BigComplex> NumericTaylor::coefficients(const std::vector<BigComplex>& jet,
                                                    long T) const {
    if (jet.size() != n_) throw std::invalid_argument("NumericTaylor: jet size != order");
    std::vector<BigComplex> c(T + 1, BigComplex(bits_));
    Int fact(1);
    for (unsigned k = 0; k < n_ && static_cast<long>(k) <= T; ++k) {
        if (k > 0) fact *= k;
        c[k] = jet[k] / BigComplex(BigFloat(fact, bits_), BigFloat(bits_));
    }
    // falling factorial ff(s, i) = s (s-1) ... (s-i+1) over the integers
    auto ff = [](long s, unsigned i) {
        Int r(1);
        for (unsigned t = 0; t < i; ++t) r *= Int(s - static_cast<long>(t));
        return r;
    };
    long D = 0;
    for (unsigned i = 0; i <= n_; ++i)
        D = std::max(D, static_cast<long>(b_[i].size()) - 1 - static_cast<long>(i) - mu_);

    for (long M = static_cast<long>(n_); M <= T; ++M) {
        BigComplex rhs(bits_);
        for (long d = 1; d <= std::min(D, M); ++d) {
            // g_d(M-d) = sum_i b_{i, d+mu+i} ff(M-d, i)
            BigComplex g(bits_);
            bool any = false;
            for (unsigned i = 0; i <= n_; ++i) {
                long idx = d + mu_ + static_cast<long>(i);
                if (idx < 0 || idx >= static_cast<long>(b_[i].size())) continue;
                const BigComplex& bc = b_[i][idx];
                if (bc.is_zero()) continue;
                g += bc * BigComplex(BigFloat(ff(M - d, i), bits_), BigFloat(bits_));
                any = true;
            }
            if (any) rhs += g * c[M - d];
        }
        // g_0(M) = b_n(0) * ff(M, n)  (+ lower-order terms at index mu+i)
        BigComplex g0(bits_);
        for (unsigned i = 0; i <= n_; ++i) {
            long idx = mu_ + static_cast<long>(i);
            if (idx < 0 || idx >= static_cast<long>(b_[i].size())) continue;
            const BigComplex& bc = b_[i][idx];
            if (bc.is_zero()) continue;
            g0 += bc * BigComplex(BigFloat(ff(M, i), bits_), BigFloat(bits_));
        }
        c[M] = -rhs / g0;
    }
    return c;
}

std::vector<BigComplex> NumericTaylor::eval_derivs(const std::vector<BigComplex>& coef,
                                                   const BigComplex& x, unsigned kmax) {
    const mpfr_prec_t bits = x.prec();
    std::vector<BigComplex> out(kmax + 1, BigComplex(bits));
    for (unsigned d = 0; d <= kmax; ++d) {
        BigComplex acc(bits);
        for (size_t m = coef.size(); m-- > d;) {
            Int f(1);
            for (unsigned t = 0; t < d; ++t) f *= Int(static_cast<long>(m) - t);
            acc = acc * x + coef[m] * BigComplex(BigFloat(f, bits), BigFloat(bits));
        }
        out[d] = acc;
    }
    return out;
}

long NumericTaylor::terms_for(const BigFloat& r, long digits) const {
    BigFloat q = r / radius_;
    if (!(q < BigFloat(1L, bits_)))
        throw std::domain_error("NumericTaylor: evaluation outside the disk");
    double qd = q.to_double();
    if (qd <= 0) return 16;
    long T = static_cast<long>(std::ceil((digits + 10) * std::log(10.0) / -std::log(qd))) + 10;
    return std::max<long>(T, 2 * n_ + 4);
}

// ---------------------------------------------------------------------

namespace {

long basis_terms_for(const LocalBasis& basis, const BigFloat& dist, long digits) {
    double q = (dist / basis.radius).to_double();
    if (q >= 0.97)
        throw std::domain_error("use path_connect");
    long T = static_cast<long>(std::ceil((digits + 25) * std::log(10.0) / -std::log(q))) + 16;
    return T;
}

}  // namespace

ConnectionMatrix connect(const FuchsianODE& ode, const LocalPoint& p, const LocalPoint& q,
                         long digits, const std::optional<BigComplex>& base_frame) {
    if (p.infinite || q.infinite)
        throw std::domain_error("use path_connect");
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    const BigComplex zp(p.value, bits), zq(q.value, bits);
    const BigComplex mid = BigFloat(Rat(1, 2), bits) * (zp + zq);
    const BigComplex mid2 = zp + BigFloat(0.55, bits) * (zq - zp);

    // probe radii cheaply (T=4 basis would also work, but radius needs no table)
    LocalBasis probe_p = local_basis(ode, p, 4), probe_q = local_basis(ode, q, 4);
    BigFloat dpq = abs(zq - zp);
    if (!(dpq < probe_p.radius + probe_q.radius))
        throw std::domain_error("use path_connect");

    const BigFloat half = dpq * BigFloat(0.55, bits);
    long Tp = basis_terms_for(probe_p, half, digits);
    long Tq = basis_terms_for(probe_q, half, digits);

    LocalBasis Bp = local_basis(ode, p, Tp);
    LocalBasis Bq = local_basis(ode, q, Tq);
    const BigComplex up = base_frame ? unit(*base_frame) : unit(zq - zp);
    const BigComplex uq = unit(zp - zq);

    CMatrix Yp = evaluate_basis(Bp, mid, digits, up).jets;
    CMatrix Yq = evaluate_basis(Bq, mid, digits, uq).jets;

    BigFloat cond = Yq.cond_estimate();
    if (cond > pow10(digits - 20, bits)) {
        std::ostringstream os;
        os << "connect: ill-conditioned basis matrix at matching point, cond ~ "
           << cond.str(4);
        throw std::runtime_error(os.str());
    }
    CMatrix C = Yp * Yq.inverse();

    // residual check at a second matching point
    CMatrix Yp2 = evaluate_basis(Bp, mid2, digits, up).jets;
    CMatrix Yq2 = evaluate_basis(Bq, mid2, digits, uq).jets;
    BigFloat resid = (Yp2 - C * Yq2).max_norm();
    BigFloat scale = Yp2.max_norm() + pow10(-digits, bits);

    ConnectionMatrix out;
    out.from = p;
    out.to = q;
    out.entries = std::move(C);
    out.condition = cond;
    BigFloat rel = resid / scale;
    out.precision_estimate = rel.is_zero()
                                 ? digits
                                 : std::min<long>(digits, -static_cast<long>(
                                       std::floor(std::log10(std::max(rel.to_double(), 1e-320)))));
    out.path = {mid};
    return out;
}

CMatrix taylor_step(const FuchsianODE& ode, const BigComplex& z0, const BigComplex& z1,
                    const CMatrix& F, long digits) {
    const unsigned n = ode.order();
    if (F.rows() != n || F.cols() != n)
        throw std::invalid_argument("taylor_step: fundamental matrix must be n x n");
    NumericTaylor taylor(ode, z0, digits);
    BigComplex x = z1 - z0;
    BigFloat ax = abs(x);
    if (ax.is_zero()) return F;
    if (ax > BigFloat(0.5, x.prec()) * taylor.radius())
        throw std::domain_error("taylor_step: step too large");
    long T = taylor.terms_for(ax, digits);
    CMatrix out(n, n, x.prec());
    for (size_t j = 0; j < n; ++j) {
        std::vector<BigComplex> jet;
        for (size_t i = 0; i < n; ++i) jet.push_back(F.at(i, j));
        auto coef = taylor.coefficients(jet, T);
        auto vals = NumericTaylor::eval_derivs(coef, x, n - 1);
        for (size_t i = 0; i < n; ++i) out.at(i, j) = vals[i];
    }
    return out;
}

ConnectionMatrix path_connect(const FuchsianODE& ode, const LocalPoint& p,
                              const LocalPoint& q, const std::vector<BigComplex>& waypoints,
                              long digits, const std::optional<BigComplex>& base_frame) {
    const mpfr_prec_t bits = bits_for_digits(digits + 15);
    const unsigned n = ode.order();

    if (p == q && waypoints.empty()) {
        ConnectionMatrix out;
        out.from = p;
        out.to = q;
        out.entries = CMatrix::identity(n, bits);
        out.precision_estimate = digits;
        return out;
    }
    if ((p.infinite || q.infinite) && waypoints.empty())
        throw std::invalid_argument("path_connect: waypoints required for an endpoint at infinity");

    // raise all waypoints to working precision
    std::vector<BigComplex> nodes;
    for (const auto& wpt : waypoints)
        nodes.push_back(BigComplex(BigFloat::parse(wpt.re.str(40), digits + 15),
                                   BigFloat::parse(wpt.im.str(40), digits + 15)));

    const BigFloat scale = nearest_singularity_scale(ode, 40);

    // --- start frame: the branch anchor is the direction toward the other
    // endpoint (toward the adjacent waypoint when that endpoint is infinite),
    // so homotopic waypoint choices produce the same basis normalization
    LocalBasis probe_p = local_basis(ode, p, 4);
    BigComplex first_target = !nodes.empty() ? nodes.front() : BigComplex(q.value, bits);
    BigComplex z_start, up;
    if (p.infinite) {
        BigComplex t_first = BigComplex(1L, bits) / first_target;
        up = base_frame ? unit(*base_frame) : unit(t_first);
        BigComplex t_start = BigFloat(0.5, bits) * probe_p.radius * up;
        z_start = BigComplex(1L, bits) / t_start;
    } else {
        BigComplex zp(p.value, bits);
        up = q.infinite ? unit(first_target - zp) : unit(BigComplex(q.value, bits) - zp);
        if (base_frame) up = unit(*base_frame);
        BigComplex walk = unit(first_target - zp);
        BigFloat reach = abs(first_target - zp);
        BigFloat r = BigFloat(0.5, bits) * probe_p.radius;
        if (r > BigFloat(0.9, bits) * reach) r = BigFloat(0.9, bits) * reach;
        z_start = zp + r * walk;
    }
    long Tp = basis_terms_for(probe_p, BigFloat(0.55, bits) * probe_p.radius, digits);
    LocalBasis Bp = local_basis(ode, p, Tp);
    CMatrix Yp = evaluate_basis(Bp, z_start, digits, up).jets;
    CMatrix F(n, n, bits);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) F.at(j, i) = Yp.at(i, j);  // columns = solutions

    // --- end frame target, anchored symmetrically
    LocalBasis probe_q = local_basis(ode, q, 4);
    BigComplex last_node = !nodes.empty() ? nodes.back()
                                          : (p.infinite ? z_start : BigComplex(p.value, bits));
    BigComplex z_end, uq;
    if (q.infinite) {
        BigComplex t_last = BigComplex(1L, bits) / last_node;
        uq = unit(t_last);
        BigComplex t_end = BigFloat(0.5, bits) * probe_q.radius * uq;
        z_end = BigComplex(1L, bits) / t_end;
    } else {
        BigComplex zq(q.value, bits);
        uq = p.infinite ? unit(last_node - zq) : unit(BigComplex(p.value, bits) - zq);
        BigComplex walk = unit(last_node - zq);
        BigFloat reach = abs(last_node - zq);
        BigFloat r = BigFloat(0.5, bits) * probe_q.radius;
        if (r > BigFloat(0.9, bits) * reach) r = BigFloat(0.9, bits) * reach;
        z_end = zq + r * walk;
    }

    // --- walk the polyline with adaptive Taylor steps
    std::vector<BigComplex> targets = nodes;
    targets.push_back(z_end);
    BigComplex cur = z_start;
    std::vector<BigComplex> recorded{z_start};
    for (const BigComplex& tgt : targets) {
        while (true) {
            BigComplex delta = tgt - cur;
            BigFloat d = abs(delta);
            if (d.is_zero()) break;
            BigFloat clearance = distance_to_singularities(ode, cur, 40);
            if (clearance < BigFloat(0.01, bits) * scale)
                throw std::domain_error("reroute");
            BigFloat step = BigFloat(0.45, bits) * clearance;
            if (step >= d) {
                F = taylor_step(ode, cur, tgt, F, digits);
                cur = tgt;
                break;
            }
            BigComplex next = cur + step * unit(delta);
            F = taylor_step(ode, cur, next, F, digits);
            cur = next;
        }
        recorded.push_back(cur);
    }

    // --- solve against the q-basis at the landing point
    long Tq = basis_terms_for(probe_q, BigFloat(0.55, bits) * probe_q.radius, digits);
    LocalBasis Bq = local_basis(ode, q, Tq);
    CMatrix Yq = evaluate_basis(Bq, z_end, digits, uq).jets;
    // F columns are the continued p-solutions: rows of the continued Yp
    CMatrix Ycont(n, n, bits);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) Ycont.at(i, j) = F.at(j, i);
    CMatrix C = Ycont * Yq.inverse();

    ConnectionMatrix out;
    out.from = p;
    out.to = q;
    out.entries = std::move(C);
    out.condition = Yq.cond_estimate();
    out.precision_estimate = digits;  // refined by round-trip checks in callers
    out.path = std::move(recorded);
    return out;
}

}  // namespace fuchs
