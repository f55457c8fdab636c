#include "expsum/oracle.hpp"

#include <cstddef>
#include <string>

#include "expsum/simd.hpp"

namespace expsum {

namespace {

constexpr u64 kEnumCap = 1ull << 24;

// dst[(r + t) mod p] += src[t] for t = 0..p−1, as two contiguous spans.
void rot_add_row(i64* dst, const i64* src, u64 p, u64 r) {
    simd::add_span_i64(dst + r, src, p - r);
    simd::add_span_i64(dst, src + (p - r), r);
}

}  // namespace

CycloElem char_sum(const FqCtx& F, const FqElem& lambda, u64 m, u64 d) {
    u64 p = F.p();
    if (d % p == 0) throw HypothesisFailed("char_sum requires p coprime to d");
    if (m == 0) throw BadIndex("char_sum level m = 0");
    unsigned S = F.s() * static_cast<unsigned>(m);
    FqCtx Fm(p, S);
    if (Fm.q() > kEnumCap) throw TooLarge("char_sum enumeration over q > 2^24");
    FqElem lam = (m == 1) ? lambda : embed_into(F, lambda, Fm);

    std::vector<i64> counts(p, 0);
    for (u64 n = 0; n < Fm.q(); ++n) {
        FqElem x = Fm.from_index(n);
        FqElem v = Fm.add(Fm.pow(x, d), Fm.mul(lam, x));
        counts[Fm.trace_to_prime(v)] += 1;
    }
    return zeta_accumulate_i64(p, counts);
}

CycloPoly fibre_L_exact(const FqCtx& F, const FqElem& lambda, u64 d) {
    if (d < 2) throw BadIndex("fibre degree d must be at least 2");
    std::vector<CycloElem> S;
    S.reserve(d - 1);
    for (u64 m = 1; m < d; ++m) S.push_back(char_sum(F, lambda, m, d));
    return poly_from_log_coeffs(F.p(), S, d - 1);
}

// ---------------------------------------------------------- batch tables ----

AllFibreSums::AllFibreSums(u64 p, unsigned e)
    : F_(p, e), p_(p), e_(e), q_(F_.q()) {
    if (p < 5) throw HypothesisFailed("cubic-family tables require p >= 5");
    if (q_ > kEnumCap) throw TooLarge("fibre tables over q > 2^24");

    // Trace form: tr[i] = Tr(Y^i) for i = 0..2e−2, so the functional
    // coordinates of x are u_l(x) = Tr(Y^l x) = Σ_j x_j tr[l+j].
    std::vector<u64> tr(2 * e_ - 1);
    {
        FqElem Y = (e_ == 1) ? F_.one() : F_.from_index(p_);
        FqElem pw = F_.one();
        for (size_t i = 0; i < tr.size(); ++i) {
            tr[i] = F_.trace_to_prime(pw);
            pw = F_.mul(pw, Y);
        }
    }
    auto u_index = [&](const FqElem& x) {
        u64 idx = 0, scale = 1;
        for (unsigned l = 0; l < e_; ++l, scale *= p_) {
            u64 acc = 0;
            for (unsigned j = 0; j < e_; ++j) acc += mulp(x[j], tr[l + j], p_);
            idx += (acc % p_) * scale;
        }
        return idx;
    };

    // ---- S_1: A[u(x)][Tr(x³)] += 1 over x ∈ F_q.
    t1_.assign(q_ * p_, 0);
    for (u64 n = 0; n < q_; ++n) {
        FqElem x = F_.from_index(n);
        FqElem x3 = F_.mul(F_.mul(x, x), x);
        t1_[u_index(x) * p_ + F_.trace_to_prime(x3)] += 1;
    }

    // ---- S_2 over F_{q²} = F_q[w], w² = n with n a nonsquare (we use the
    // generator g: its order q−1 is even, so g is never a square).
    t2_.assign(q_ * p_, 0);
    const FqElem& g = F_.generator();
    std::vector<char> is_square(q_, 0);
    std::vector<i64> SQ(p_, 0), NQ(p_, 0);
    {
        FqElem g2 = F_.mul(g, g);
        FqElem y = F_.one();
        for (u64 i = 0; i < (q_ - 1) / 2; ++i) {
            is_square[F_.to_index(y)] = 1;
            SQ[F_.trace_to_prime(y)] += 1;
            y = F_.mul(y, g2);
        }
        u64 per_trace = q_ / p_;  // |{x ∈ F_q : Tr x = t}| for each t
        for (u64 t = 0; t < p_; ++t)
            NQ[t] = static_cast<i64>(per_trace) - (t == 0 ? 1 : 0) - SQ[t];
    }
    FqElem six_n = F_.mul(F_.from_u64(6), g);
    t2_[0] += static_cast<i64>(q_);  // U = 0: the V-sum is q at exponent 0
    for (u64 n = 1; n < q_; ++n) {
        FqElem U = F_.from_index(n);
        FqElem U3 = F_.mul(F_.mul(U, U), U);
        u64 base = F_.trace_to_prime(F_.add(U3, U3));          // Tr(2U³)
        u64 row = u_index(F_.add(U, U)) * p_;                  // λ-coupling u(2U)
        const std::vector<i64>& H = is_square[F_.to_index(F_.mul(six_n, U))] ? SQ : NQ;
        for (u64 t = 0; t < p_; ++t)
            t2_[row + (base + t) % p_] += (t == 0 ? 1 : 0) + 2 * H[t];
    }

    // ---- fold Tr(λx) into the tables: row λ becomes Σ_u A[u][τ − ⟨λ,u⟩].
    transform_in_place(t1_);
    transform_in_place(t2_);
}

// Separable transform: axis by axis, OUT[.., λ_l, ..][τ] =
// Σ_{u_l} IN[.., u_l, ..][(τ − λ_l u_l) mod p] — a rotate-and-add of rows.
void AllFibreSums::transform_in_place(std::vector<i64>& tab) const {
    std::vector<i64> out(tab.size());
    u64 stride = 1;
    for (unsigned l = 0; l < e_; ++l, stride *= p_) {
        std::fill(out.begin(), out.end(), 0);
        u64 block = stride * p_;
        for (u64 hi = 0; hi < q_; hi += block) {
            for (u64 lo = 0; lo < stride; ++lo) {
                u64 base = hi + lo;
                for (u64 lv = 0; lv < p_; ++lv) {
                    i64* orow = &out[(base + lv * stride) * p_];
                    for (u64 uv = 0; uv < p_; ++uv) {
                        const i64* irow = &tab[(base + uv * stride) * p_];
                        rot_add_row(orow, irow, p_, lv * uv % p_);
                    }
                }
            }
        }
        tab.swap(out);
    }
}

CycloElem AllFibreSums::fold_row(const std::vector<i64>& tab, const FqElem& lam) const {
    if (lam.size() != e_) throw FieldMismatch("fibre parameter from a different field");
    u64 r = F_.to_index(lam);
    std::vector<i64> counts(tab.begin() + r * p_, tab.begin() + (r + 1) * p_);
    return zeta_accumulate_i64(p_, counts);
}

CycloElem AllFibreSums::s1(const FqElem& lam) const { return fold_row(t1_, lam); }
CycloElem AllFibreSums::s2(const FqElem& lam) const { return fold_row(t2_, lam); }

std::pair<CycloElem, CycloElem> AllFibreSums::l_coeffs(const FqElem& lam) const {
    CycloElem c1 = s1(lam);
    CycloElem c2 = (c1 * c1 + s2(lam)).divided_exact(2);
    return {c1, c2};
}

// ------------------------------------------------------------ power sums ----

namespace {

// h_k(α, β) from σ1 = α+β, σ2 = αβ via h_j = σ1 h_{j−1} − σ2 h_{j−2}.
CycloElem h_complete(u64 p, u64 k, const CycloElem& s1, const CycloElem& s2) {
    CycloElem h0 = CycloElem::from_int(p, 1);
    if (k == 0) return h0;
    CycloElem h1 = s1;
    for (u64 j = 2; j <= k; ++j) {
        CycloElem h2 = s1 * h1 - s2 * h0;
        h0 = std::move(h1);
        h1 = std::move(h2);
    }
    return h1;
}

}  // namespace

std::vector<CycloElem> mk_power_sums(u64 p, u64 k, u64 smax) {
    if (smax == 0) throw EmptyInput("smax = 0");
    std::vector<CycloElem> N(smax, CycloElem::zero(p));
    for (u64 e = 1; e <= smax; ++e) {
        AllFibreSums afs(p, static_cast<unsigned>(e));
        const FqCtx& F = afs.field();
        u64 tmax = smax / e;
        for (u64 n = 0; n < F.q(); ++n) {
            FqElem lam = F.from_index(n);
            if (F.degree_over_prime(lam) != e) continue;
            auto [c1, c2] = afs.l_coeffs(lam);
            // P_t = π₁^t + π₂^t with π₁+π₂ = −c1, π₁π₂ = c2.
            CycloElem Pprev = CycloElem::from_int(p, 2);
            CycloElem Pcur = -c1;
            CycloElem c2pow = c2;
            for (u64 t = 1; t <= tmax; ++t) {
                N[e * t - 1] += h_complete(p, k, Pcur, c2pow);
                if (t < tmax) {
                    CycloElem Pnext = -(c1 * Pcur) - c2 * Pprev;
                    Pprev = std::move(Pcur);
                    Pcur = std::move(Pnext);
                    c2pow = c2pow * c2;
                }
            }
        }
    }
    return N;
}

CycloPoly mk_exact_poly(u64 p, u64 k) {
    if (k % 2 == 0) throw OddK("mk_exact_poly requires odd k");
    if (k >= p) throw KTooLarge("mk_exact_poly requires k < p");
    u64 deg = (k + 1) / 2;
    CycloPoly M = poly_from_log_coeffs(p, mk_power_sums(p, k, deg), deg);
    if (M.degree() != static_cast<i64>(deg))
        throw DegreeMismatch("M_k leading coefficient vanished at degree " +
                             std::to_string(deg));
    return M;
}

CycloPoly mk_series_trunc(u64 p, u64 k, u64 smax) {
    return poly_from_log_coeffs(p, mk_power_sums(p, k, smax), smax);
}

}  // namespace expsum
