// expsum — exact character-sum oracles.
//
// Ground truth for the whole project: the sums S_m(λ) = Σ_{x∈F_{q^m}}
// ζ^{Tr(x^d + λx)} by direct enumeration, the fibre L-polynomials they
// determine, and the symmetric-power power sums N_s of the cubic family,
// all in exact Z[ζ_p] arithmetic.  Nothing here touches p-adic analysis;
// the cohomological pipeline is tested against these values.
//
// The per-fibre interface (char_sum, fibre_L_exact) enumerates one field per
// call.  AllFibreSums computes S_1 and S_2 for *every* λ ∈ F_{p^e} at once:
// a histogram indexed by the linear functionals x ↦ Tr(b_l x) is folded by a
// separable (Z/p)^e rotate-and-add transform, turning O(q²) enumeration into
// O(e·q·p²) span additions.  That batch path is what makes the power sums
// N_s feasible at s = 5 (161051 fibres for p = 11).

#ifndef EXPSUM_ORACLE_HPP
#define EXPSUM_ORACLE_HPP

#include <utility>
#include <vector>

#include "expsum/cyclo.hpp"
#include "expsum/ff.hpp"
#include "expsum/lpoly.hpp"

namespace expsum {

// S_m(λ) = Σ_{x ∈ F_{q^m}} ζ^{Tr_{F_{q^m}/F_p}(x^d + λx)}, exactly, where
// λ lives in F = F_{p^s} and the level-m sum runs over the degree-m
// extension.  λ is carried into F_{p^{sm}} by minimal-polynomial matching
// (embed_into); any Frobenius conjugate gives the same sum.
// Throws HypothesisFailed if p | d, TooLarge if p^{sm} > 2^24.
CycloElem char_sum(const FqCtx& F, const FqElem& lambda, u64 m, u64 d);

// L(f_λ, T) = exp(Σ_{m≥1} S_m(λ) T^m / m), a polynomial of degree d−1 with
// constant term 1, reconstructed exactly from S_1..S_{d−1}.
// Throws DivisionInexact if the exponential fails to have Z[ζ] coefficients
// (impossible for a genuine character sum — this is a built-in check).
CycloPoly fibre_L_exact(const FqCtx& F, const FqElem& lambda, u64 d);

// S_1(λ) and S_2(λ) for every λ ∈ F_{p^e} of the cubic family x³ + λx.
//
// S_1: one pass over F_q fills A[u(x)][Tr(x³)] += 1 where u(x) is the
// coordinate vector of the functional Tr(λx) in λ; the separable transform
// then replaces row λ by the ζ-exponent histogram of S_1(λ).
//
// S_2 never enumerates F_{q²}: writing X = U + Vw with w² = n (n a fixed
// nonsquare of F_q) gives Tr_{F_{q²}/F_q}(X³ + λX) = 2U³ + 6nUV² + 2λU, so
// the V-sum collapses to the quadratic-character histogram
//   Σ_V ζ^{Tr(cV²)},  c = 6nU:  count(t) = [t=0] + 2·(SQ or NQ)[t]
// with SQ/NQ the trace histograms of the nonzero squares / nonsquares.
class AllFibreSums {
  public:
    // Builds both tables.  Requires p ≥ 5 (so p ∤ 3 and 6n ≠ 0);
    // throws TooLarge if p^e > 2^24.
    AllFibreSums(u64 p, unsigned e);

    const FqCtx& field() const { return F_; }
    u64 p() const { return p_; }
    unsigned e() const { return e_; }

    CycloElem s1(const FqElem& lam) const;  // S_1(λ) over F_{p^e}
    CycloElem s2(const FqElem& lam) const;  // S_2(λ), level-2 sum

    // Coefficients (c1, c2) of the fibre L-polynomial 1 + c1 T + c2 T²:
    // c1 = S_1, c2 = (S_1² + S_2)/2.  The division by 2 is exact for any
    // genuine character sum; DivisionInexact here means a table bug.
    std::pair<CycloElem, CycloElem> l_coeffs(const FqElem& lam) const;

  private:
    FqCtx F_;
    u64 p_;
    unsigned e_;
    u64 q_;
    std::vector<i64> t1_, t2_;  // q rows × p entries, row r = histogram of S_i(from_index(r))

    void transform_in_place(std::vector<i64>& tab) const;
    CycloElem fold_row(const std::vector<i64>& tab, const FqElem& lam) const;
};

// Power sums N_s, s = 1..smax, of the k-th symmetric-power L-function of the
// cubic family:
//   N_s = Σ_{λ̄ ∈ F_{p^s}} h_k(π₁^{s/deg λ̄}, π₂^{s/deg λ̄}),
// h_k the complete homogeneous symmetric polynomial of degree k and π_i(λ̄)
// the inverse roots of the fibre L-polynomial over F_{p^deg λ̄}.  Each λ̄ is
// visited once, in its field of definition, via AllFibreSums; the h_k values
// are assembled from (c1, c2) by Newton/Chebyshev-style recurrences, no root
// extraction.  k = 0 is allowed (N_s = p^s, a useful self-test).
std::vector<CycloElem> mk_power_sums(u64 p, u64 k, u64 smax);

// M_k(T) = exp(Σ_{s≥1} N_s T^s / s) for odd k < p: a polynomial of degree
// (k+1)/2, reconstructed from exactly that many power sums.
// Throws OddK if k is even, KTooLarge if k ≥ p, DegreeMismatch if the
// leading coefficient vanishes (contradicting the degree statement).
CycloPoly mk_exact_poly(u64 p, u64 k);

// Truncation of the series exp(Σ_{s=1}^{smax} N_s T^s / s) to degree smax,
// for even (or any) k — used where M_k itself need not be a polynomial but
// its trivial factors are divided off from the truncated series.
CycloPoly mk_series_trunc(u64 p, u64 k, u64 smax);

}  // namespace expsum

#endif  // EXPSUM_ORACLE_HPP
