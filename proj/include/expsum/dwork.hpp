// expsum — the p-adic cohomology side of the fibre L-functions.
//
// For f(x) = x^d + a x the splitting function θ gives the twisting series
//     F(a, x) = θ(x^d) θ(a x) = Σ_r H_r(a) x^r,
// and the one-step map ᾱ = ψ_x ∘ F(a,·) carries the rank-(d−1) quotient M_a
// (weighted power series mod the image of D_a = x∂_x + π(d x^d + a x)·) into
// M_{a^p}: commuting D through ψ∘F gives ᾱ∘D_a = p·D_{a^p}∘ᾱ, so the image
// of ᾱ must be reduced by the relations of the fibre at a^p.  On Teichmüller
// points of the prime field (a^p = a) the two reductions coincide; at points
// of higher degree they differ, and only the a^p-side reduction reproduces
// the exact character sums.  Everything here is polynomial in a at fixed
// π-precision, so the reduction and the matrix 𝔄 of the Frobenius are
// computed exactly; growth floors certify that the x- and basis-truncations
// lose nothing below the requested precision.
//
// Conventions: 𝔄 is the row matrix, ᾱ(x^i) ≡ Σ_j 𝔄_{ij} x^j mod D_{a^p};
// over F_{p^s} the fibre matrix is 𝔄(z)·𝔄(z^p)···𝔄(z^{p^{s−1}}) acting on row
// vectors, and L(f_z̄, T) = det(1 − M T).

#ifndef EXPSUM_DWORK_HPP
#define EXPSUM_DWORK_HPP

#include <vector>

#include "expsum/aseries.hpp"
#include "expsum/ff.hpp"
#include "expsum/ppoly.hpp"
#include "expsum/rational.hpp"

namespace expsum {

// growth parameters b = (p−1)/p and b′ = b/p as exact rationals
Rat dwork_b(u64 p);
Rat dwork_bprime(u64 p);

// Smallest x-truncation N such that every dropped monomial x^n, n > N,
// keeps ≥ prec certified π-digits after the reduction's π-divisions.
i64 dwork_xtrunc(u64 p, u64 d, i64 prec);

// Ring storage (π-digits) with headroom for the worst reduction path.
i64 dwork_storage(u64 p, u64 d, i64 prec);

// H_r(a) = Σ_{di ≤ r} θ_i θ_{r−di} a^{r−di} for r = 0..rmax; exact
// polynomials with growth floor ρ_r = b′·r/d (so H_0 = 1, H_1 = πa).
std::vector<PadicSeriesA> f_series(const PadicRing& R, u64 d, i64 rmax);

// Σ_j xc[j]·x^j with the two-parameter floor
//     ord(coefficient of a^i x^j) ≥ b′(1−1/d)·i + b·j/d + rho,
// verified on construction.
class XSeries {
  public:
    XSeries(const PadicRing& R, u64 d, std::vector<PadicSeriesA> xc, Rat rho);
    const PadicRing& ring() const { return *R_; }
    u64 d() const { return d_; }
    Rat rho() const { return rho_; }
    size_t xlen() const { return xc_.size(); }
    const PadicSeriesA& coord(size_t j) const;

  private:
    const PadicRing* R_;
    u64 d_;
    Rat rho_;
    std::vector<PadicSeriesA> xc_;
};

// 𝒱-component of u under 𝒦 = 𝒱 ⊕ D_{a^e}𝒦: rewrites x^n (n ≥ d) top-down by
//     d·π·x^n ≡ −(n−d)·x^{n−d} − π a^e·x^{n−d+1}   (mod D_{a^e}𝒦)
// and returns the d coordinates on {x^0, …, x^{d−1}}.  The default e = 1 is
// the reduction in the fibre at a itself (x³ ≡ −(a/3)x for d = 3); frob_matrix
// reduces its images with e = p, the relations of the fibre at a^p.  The x^0
// coordinate is never produced by the rewriting, so inputs divisible by x
// stay divisible.
std::vector<PadicSeriesA> reduce_mod_Da(const XSeries& u, u64 apow = 1);

// Frobenius matrix as exact polynomials in a, entries 𝔄_{ij}, i, j ∈ 1..d−1,
// with the certified entry floor ord ≥ b′(1−1/d)·deg_a + b′(pj−i)/d.
struct FrobMatrixA {
    const PadicRing* R = nullptr;
    u64 d = 0;
    i64 prec = 0;  // certified output target the truncations were sized for
    std::vector<PadicSeriesA> entries;  // (d−1)² row-major

    const PadicSeriesA& entry(u64 i, u64 j) const;  // 1-based
};

FrobMatrixA frob_matrix(const PadicRing& R, u64 d, i64 prec);

// specialize the polynomial matrix at an integral point (Teichmüller lift)
PadicMatrix frob_at(const FrobMatrixA& F, const PadicElem& a);

// det(1 − M T) for M = 𝔄(z)·𝔄(z^p)···𝔄(z^{p^{s−1}}), z = Teich(z̄)
PadicPoly fibre_L_from_frob(const FrobMatrixA& F, const FqElem& zbar);
PadicPoly fibre_L_padic(u64 p, u64 s, const FqElem& zbar, u64 d, i64 prec);

// Main term of 𝔄_{ij}: π^{pj−i−(d−1)r}/(r!·m!)·a^m with r = ⌊(pj−i)/d⌋ and
// m = pj−i−dr; valid (with the tail strictly smaller) for p ≥ d+6.
struct FrobLeadingTerm {
    u64 r;          // ⌊(pj−i)/d⌋
    u64 a_degree;   // pj−i−dr
    u64 pi_power;   // pj−i−(d−1)r
    Rat valuation;  // ord_p of the main term at a unit, pi_power/(p−1)
};
FrobLeadingTerm frob_leading_term(u64 d, u64 p, u64 i, u64 j);
// the main term's coefficient π^{pi_power}/(r!·a_degree!) in a given ring
PadicElem frob_main_coeff(const PadicRing& R, const FrobLeadingTerm& lt);

// Dual basis g*_i = x^{−i} + Σ_{m≥d} B_m x^{−m} against the pairing
// ⟨x^n, x^{−m}⟩ = δ_{nm}: returns B_0..B_jmax from the recurrence
// B_{n+d} = −(n/(d·επ))·B_n − (a^e/d)·B_{n+1}, ε = pi_sign, e = apow.
// Orthogonality against the image of D_{a^e} needs the same e as the
// reduction it is paired with (e = p for the entries of frob_matrix).
std::vector<PadicSeriesA> dual_basis(const PadicRing& R, u64 d, u64 i, u64 jmax,
                                     int pi_sign = +1, u64 apow = 1);

// Characteristic series of α_z truncated to the monomial basis x^0..x^Nbasis,
// mod (T^{tdeg+1}, π^prec); z̄ ∈ F_p.  Throws TruncationUncertified unless the
// dropped rows are certified ≥ prec.
PadicPoly fredholm_truncated(u64 p, const FqElem& zbar, u64 d, i64 tdeg,
                             i64 Nbasis, i64 prec);

}  // namespace expsum

#endif  // EXPSUM_DWORK_HPP
