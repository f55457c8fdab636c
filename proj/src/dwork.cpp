#include "expsum/dwork.hpp"

#include <algorithm>
#include <sstream>

namespace expsum {

namespace {

// vacuous floor for zero accumulators: passes every check, never the minimum
// that matters
const Rat kRhoInf(1'000'000'000L);

void check_pd(u64 p, u64 d) {
    if (d < 2) throw BadIndex("need d >= 2");
    // convergence window b > 1/(p−1) > b′ (holds for every p ≥ 3)
    if (!(Rat((i64)(p - 1), (i64)p) > Rat(1, (i64)(p - 1)) &&
          Rat(1, (i64)(p - 1)) > Rat((i64)(p - 1), (i64)(p * p))))
        throw NonConvergent("growth window b > 1/(p−1) > b′ fails");
    if (p <= d) throw BadIndex("need p > d for unit reduction constants");
}

// certified π-digits left for a dropped monomial x^n after reduction: the
// H-coefficient floor minus the worst-case π-divisions along its path
Rat dropped_margin(u64 p, u64 d, i64 n) {
    i64 divisions = (n + (i64)d - 1) / (i64)d;
    return Rat((i64)((p - 1) * (p - 1)) * ((i64)p * n - (i64)(d - 1)),
               (i64)(p * p * d)) -
           Rat(divisions);
}

}  // namespace

Rat dwork_b(u64 p) { return Rat((i64)(p - 1), (i64)p); }
Rat dwork_bprime(u64 p) { return Rat((i64)(p - 1), (i64)(p * p)); }

i64 dwork_xtrunc(u64 p, u64 d, i64 prec) {
    check_pd(p, d);
    for (i64 N = (i64)d; N < 100000; ++N) {
        bool ok = true;
        // the margin is increasing for (p−1)² > pd, but scan a window anyway
        for (i64 m = N + 1; m <= N + 4 * (i64)d; ++m)
            if (dropped_margin(p, d, m) < Rat(prec)) ok = false;
        if (ok) return N;
    }
    throw TooLarge("no feasible x-truncation");
}

i64 dwork_storage(u64 p, u64 d, i64 prec) {
    i64 N = dwork_xtrunc(p, d, prec);
    return prec + (N + (i64)d - 1) / (i64)d + 6;
}

std::vector<PadicSeriesA> f_series(const PadicRing& R, u64 d, i64 rmax) {
    check_pd(R.p(), d);
    const u64 p = R.p();
    std::vector<PadicSeriesA> H;
    H.reserve(rmax + 1);
    for (i64 r = 0; r <= rmax; ++r) {
        std::vector<PadicElem> c((size_t)r + 1, R.zero());
        for (i64 i = 0; (i64)d * i <= r; ++i)
            c[(size_t)(r - (i64)d * i)] = R.theta_coeff((u64)i) *
                                          R.theta_coeff((u64)(r - (i64)d * i));
        H.emplace_back(R, d, std::move(c), Rat((i64)(p - 1) * r, (i64)(p * p * d)));
    }
    return H;
}

// ---------------------------------------------------------------------------
// XSeries and reduction

XSeries::XSeries(const PadicRing& R, u64 d, std::vector<PadicSeriesA> xc, Rat rho)
    : R_(&R), d_(d), rho_(rho), xc_(std::move(xc)) {
    check_pd(R.p(), d);
    const Rat bd = dwork_b(R.p()) / Rat((i64)d);
    for (size_t j = 0; j < xc_.size(); ++j) {
        if (xc_[j].len() == 0) continue;
        if (&xc_[j].ring() != &R || xc_[j].d() != d)
            throw FieldMismatch("x-coordinate from a different ring");
        verify_floor(xc_[j], rho_ + bd * Rat((i64)j));
    }
}

const PadicSeriesA& XSeries::coord(size_t j) const {
    if (j >= xc_.size()) throw BadIndex("x-power outside the retained range");
    return xc_[j];
}

std::vector<PadicSeriesA> reduce_mod_Da(const XSeries& u, u64 apow) {
    const PadicRing& R = u.ring();
    const u64 d = u.d();
    if (apow < 1) throw BadIndex("apow must be >= 1");
    const PadicElem invd = R.from_int((i64)d).inv();
    std::vector<PadicSeriesA> xc;
    xc.reserve(u.xlen());
    for (size_t j = 0; j < u.xlen(); ++j) xc.push_back(u.coord(j));
    while (xc.size() < d) xc.push_back(PadicSeriesA::zero(R, d, kRhoInf));

    // d·π·x^j ≡ −(j−d)·x^{j−d} − π a^e·x^{j−d+1} for j ≥ d, applied top-down
    for (size_t j = xc.size(); j-- > d;) {
        if (xc[j].len() == 0) continue;
        PadicSeriesA t = xc[j].scale(invd);
        if (j > d)
            xc[j - d] += t.scale_int(-(i64)(j - d)).div_pi(1);
        xc[j - d + 1] += t.scale_int(-1).mul_a_pow(apow);
        xc[j] = PadicSeriesA::zero(R, d, kRhoInf);
    }
    xc.resize(d, PadicSeriesA::zero(R, d, kRhoInf));
    return xc;
}

// ---------------------------------------------------------------------------
// Frobenius matrix

const PadicSeriesA& FrobMatrixA::entry(u64 i, u64 j) const {
    if (i < 1 || i > d - 1 || j < 1 || j > d - 1)
        throw BadIndex("Frobenius entry indices are 1..d−1");
    return entries[(i - 1) * (d - 1) + (j - 1)];
}

FrobMatrixA frob_matrix(const PadicRing& R, u64 d, i64 prec) {
    check_pd(R.p(), d);
    const u64 p = R.p();
    const i64 N = dwork_xtrunc(p, d, prec);
    const i64 headroom = (N + (i64)d - 1) / (i64)d;
    if (R.prec() < prec + headroom)
        throw PrecisionExhausted(
            "ring storage too small for the reduction headroom; need >= " +
            std::to_string(prec + headroom) + " pi-digits");

    std::vector<PadicSeriesA> H = f_series(R, d, (i64)p * N - 1);
    FrobMatrixA F;
    F.R = &R;
    F.d = d;
    F.prec = prec;
    F.entries.reserve((d - 1) * (d - 1));
    for (u64 i = 1; i <= d - 1; ++i) {
        // ψ_x(F(a,x)·x^i) = Σ_{n≥1} H_{pn−i}(a)·x^n
        std::vector<PadicSeriesA> xc;
        xc.reserve(N + 1);
        xc.push_back(PadicSeriesA::zero(R, d, kRhoInf));
        for (i64 n = 1; n <= N; ++n) xc.push_back(H[(size_t)((i64)p * n - (i64)i)]);
        Rat rho = -dwork_bprime(p) * Rat((i64)i) / Rat((i64)d);
        // the image of ψ∘F lives in the fibre at a^p: reduce by its relations
        std::vector<PadicSeriesA> red =
            reduce_mod_Da(XSeries(R, d, std::move(xc), rho), p);
        if (!red[0].is_zero())
            throw IdentityFailure("reduction produced a spurious x^0 component");
        for (u64 j = 1; j <= d - 1; ++j) {
            // certified entry floor: ord ≥ b′(pj−i)/d
            verify_floor(red[j], Rat((i64)(p - 1) * ((i64)(p * j) - (i64)i),
                                     (i64)(p * p * d)));
            F.entries.push_back(red[j]);
        }
    }
    return F;
}

PadicMatrix frob_at(const FrobMatrixA& F, const PadicElem& a) {
    const u64 n = F.d - 1;
    PadicMatrix M(n, std::vector<PadicElem>(n));
    for (u64 i = 1; i <= n; ++i)
        for (u64 j = 1; j <= n; ++j) M[i - 1][j - 1] = F.entry(i, j).eval(a);
    return M;
}

PadicPoly fibre_L_from_frob(const FrobMatrixA& F, const FqElem& zbar) {
    const PadicRing& R = *F.R;
    if (zbar.size() != R.s())
        throw FieldMismatch("z̄ lives in a different extension than the ring");
    PadicElem t = R.teichmuller(zbar);
    PadicMatrix M = frob_at(F, t);
    PadicElem tc = t;
    for (u64 l = 1; l < R.s(); ++l) {
        tc = tc.pow_u64(R.p());
        M = mat_mul(M, frob_at(F, tc));
    }
    return charpoly_minors(R, M);
}

PadicPoly fibre_L_padic(u64 p, u64 s, const FqElem& zbar, u64 d, i64 prec) {
    const PadicRing& R = padic_ring_cache(p, s, dwork_storage(p, d, prec));
    FrobMatrixA F = frob_matrix(R, d, prec);
    return fibre_L_from_frob(F, zbar);
}

// ---------------------------------------------------------------------------
// leading terms

FrobLeadingTerm frob_leading_term(u64 d, u64 p, u64 i, u64 j) {
    if (p < d + 6) throw HypothesisFailed("main-term estimate needs p >= d+6");
    if (i < 1 || i > d - 1 || j < 1 || j > d - 1)
        throw BadIndex("indices are 1..d−1");
    FrobLeadingTerm lt;
    u64 w = p * j - i;
    lt.r = w / d;
    lt.a_degree = w - d * lt.r;
    lt.pi_power = w - (d - 1) * lt.r;
    lt.valuation = Rat((i64)lt.pi_power, (i64)(p - 1));
    return lt;
}

PadicElem frob_main_coeff(const PadicRing& R, const FrobLeadingTerm& lt) {
    i64 f = 1;
    for (u64 k = 2; k <= lt.r; ++k) f *= (i64)k;
    for (u64 k = 2; k <= lt.a_degree; ++k) f *= (i64)k;
    return R.one().mul_pi((i64)lt.pi_power) * R.from_int(f).inv();
}

// ---------------------------------------------------------------------------
// dual basis

std::vector<PadicSeriesA> dual_basis(const PadicRing& R, u64 d, u64 i, u64 jmax,
                                     int pi_sign, u64 apow) {
    check_pd(R.p(), d);
    if (i >= d) throw BadIndex("dual index must be < d");
    if (pi_sign != 1 && pi_sign != -1) throw BadIndex("pi_sign is ±1");
    if (apow < 1) throw BadIndex("apow must be >= 1");
    const PadicElem invd = R.from_int((i64)d).inv();
    std::vector<PadicSeriesA> B;
    B.reserve(jmax + 1);
    for (u64 m = 0; m <= jmax && m < d; ++m)
        B.push_back(m == i ? PadicSeriesA::constant(R, d, R.one(), Rat(0))
                           : PadicSeriesA::zero(R, d, kRhoInf));
    for (u64 m = d; m <= jmax; ++m) {
        u64 n = m - d;
        PadicSeriesA t = B[n].scale_int(-(i64)n * pi_sign).scale(invd).div_pi(1);
        if (n + 1 < B.size())
            t += B[n + 1].scale_int(-1).scale(invd).mul_a_pow(apow);
        B.push_back(t);
    }
    return B;
}

// ---------------------------------------------------------------------------
// truncated Fredholm determinant

PadicPoly fredholm_truncated(u64 p, const FqElem& zbar, u64 d, i64 tdeg,
                             i64 Nbasis, i64 prec) {
    check_pd(p, d);
    if (zbar.size() != 1) throw BadIndex("Fredholm basis check is over F_p");
    // every dropped principal minor contains a column n > Nbasis whose
    // entries H_{pn−i}, i ≤ Nbasis, all satisfy the H floor
    Rat colfloor((i64)(p - 1) * (i64)(p - 1) * ((i64)p * (Nbasis + 1) - Nbasis),
                 (i64)(p * p * d));
    if (colfloor < Rat(prec)) {
        std::ostringstream os;
        os << "dropped-row floor " << colfloor.str() << " pi-digits < prec "
           << prec << "; enlarge Nbasis";
        throw TruncationUncertified(os.str());
    }
    const PadicRing& R = padic_ring_cache(p, 1, prec + 4);
    std::vector<PadicSeriesA> H = f_series(R, d, (i64)p * Nbasis);
    PadicElem t = R.teichmuller(zbar);
    size_t n = (size_t)Nbasis + 1;
    PadicMatrix A(n, std::vector<PadicElem>(n, R.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t m = 0; m < n; ++m) {
            i64 r = (i64)p * (i64)m - (i64)i;
            if (r >= 0) A[i][m] = H[(size_t)r].eval(t);
        }
    PadicPoly cs = charpoly_traces(R, A, tdeg);
    for (size_t m = 0; m < cs.len(); ++m) {
        PadicElem c = cs.coeff(m);
        if (c.cert() > prec) c = c.with_cert(prec);
        cs.set_coeff(m, c);
    }
    return cs;
}

}  // namespace expsum
