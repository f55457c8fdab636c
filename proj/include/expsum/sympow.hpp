// expsum — symmetric powers of the cubic family and their L-factors M_k(T).
//
// The relative cohomology of the fibre family x³ + ax is free of rank 2 on
// v = πx, w = πx² (after scaling), and its k-th symmetric power Sym^k has the
// monomial basis v^k, v^{k−1}w, …, w^k.  Row vectors of a-series act on that
// basis; the connection is ∂ = E + ·G_k where E = a·d/da acts slotwise and
// G_k is the bidiagonal matrix with (k−i)·πa on the first superdiagonal and
// −(i/3)·πa² on the first subdiagonal (0-based row i).
//
// For odd k < p every vector reduces, modulo the image of ∂, to a point of
//     V_k  =  span(e_1, …, e_{k+1})  ⊕  span(a·v^{k−2j}w^{2j}, j = 0..(k−1)/2):
// the "constants" block and the "primitive" block.  The reduction is a pair
// of explicit unit-division chains (entries are swept twice per pass, the
// leftover −E·ξ is fed back in), and on the steep valuation profile
//     ord(slot n of entry m)  ≥  (2b/3)·n + (b/3)·m + ρ,        b = (p−1)/p,
// each pass improves ρ by e = b − 1/(p−1) > 0, so the iteration converges to
// any requested precision.  For even k the kernel line of G_k joins the
// picture: vectors split into a multiple of the explicit kernel vector 𝐤
// plus a reducible part, and the reduction returns that multiplier as well.
//
// The Frobenius on Sym^k is the symmetric power of the fibre Frobenius
// followed by ψ_a; its matrix on V_k is block-triangular, and
//     M_k(T) = det(1 − T·β̄_k | primitive block)        (odd k, k < p)
// is a degree-(k+1)/2 polynomial with ℤ coefficients after embedding.  Even
// symmetric powers contribute only the explicit "trivial" factors N_k(T),
// products of linear terms in p^{k/2} or (±g)^{k/2} for the quadratic Gauss
// sum g, with multiplicities m_k, n_k given by closed formulas.
//
// The functional equation M_k(T) = ±(p^{(k+1)/2}T)^{deg} M_k(1/p^{k+1}T) is
// checked coefficientwise, and identity_suite() verifies the combinatorial
// facts the chain solves rely on (binomial ratio sums, a signed permanent
// identity, symbolic determinants of the kernel-bordered matrix N_k, kernel
// dimension counts, and the Fermat-style criterion for p mod 12 classes).

#ifndef EXPSUM_SYMPOW_HPP
#define EXPSUM_SYMPOW_HPP

#include <optional>
#include <vector>

#include "expsum/aseries.hpp"
#include "expsum/lpoly.hpp"
#include "expsum/ppoly.hpp"
#include "expsum/rational.hpp"

namespace expsum {

// Steep valuation profile: per-slot slope 2b/3 and per-entry offset
// δ_m = (b/3)·m for 1-based entry m, with b = (p−1)/p.  This is the profile
// ψ_a produces from the weak (b′ = b/p) profile of the fibre Frobenius.
Rat sym_steep_slope(u64 p);
Rat sym_delta(u64 p, u64 m);

// Contraction gained per reduction pass: e = b − 1/(p−1), positive for p ≥ 5.
Rat sym_contraction(u64 p);

// Row vector in Sym^k: k+1 entire a-series entries over a common ring with
// d = 3; entry m (1-based) is the coefficient of v^{k−m+1}w^{m−1}.
struct SymVector {
    u64 k = 0;
    std::vector<PadicSeriesA> ent;
};

// Validating constructor: k+1 entries, common ring, d = 3, entire.
SymVector make_sym(u64 k, std::vector<PadicSeriesA> ent);

// Largest offset ρ such that every stored slot certifies
// ord ≥ (2b/3)·slot + δ_entry + ρ; kRhoInf for an all-zero vector.
Rat sym_steep_rho(const SymVector& u);

// E = a·d/da (slot n ↦ n·slot n), the row action u ↦ u·G_k, and their sum ∂.
SymVector apply_e(const SymVector& u);
SymVector apply_gk(const SymVector& u);
SymVector apply_partial_a(const SymVector& u);

// G_k as an explicit (k+1)×(k+1) matrix of monomial series, stored length
// padded to atrunc ≥ 3, and the generic row-vector/matrix product.
std::vector<std::vector<PadicSeriesA>> gk_matrix(const PadicRing& R, u64 k,
                                                 i64 atrunc);
SymVector apply_row_matrix(const SymVector& u,
                           const std::vector<std::vector<PadicSeriesA>>& M);

// Even k: the kernel vector 𝐤 of the row action, supported on odd entries,
//     𝐤_{2j+1} = [ Π_{i=1}^j (k/2 − i + 1) ] / ( j! · 3^{k/2−j} ) · a^{k/2−j}.
// Throws OddK for odd k.
SymVector kernel_vector(const PadicRing& R, u64 k);

// Coordinates of a vector on V_k modulo the image of ∂.
struct VkCoords {
    std::vector<PadicElem> constants;    // k+1 coefficients on e_1..e_{k+1}
    std::vector<PadicElem> primitive;    // coefficients on a·v^{k−2j}w^{2j}
    std::optional<PadicSeriesA> kernel;  // even k: multiplier of 𝐤
};

// Reduce to V_k-coordinates, certified to `prec` π-digits.  The variant with
// rho0 trusts the caller's certificate that the input satisfies the steep
// profile with offset rho0 (needed when slot certificates are shorter than
// the valuations they would have to certify); stored digits are still
// checked against the claim wherever their certificates reach.
VkCoords reduce_odd(const SymVector& u, u64 k, i64 prec);
VkCoords reduce_odd(const SymVector& u, u64 k, i64 prec, Rat rho0);
VkCoords reduce_even(const SymVector& u, u64 k, i64 prec);
VkCoords reduce_even(const SymVector& u, u64 k, i64 prec, Rat rho0);

// Frobenius matrix on V_k, odd k: the primitive block (rows = images of
// a·v^{k−2i}w^{2i}), the constants block (rows = images of e_1..e_{k+1}),
// and the assembled square matrix on (e_1..e_{k+1}, a·v^k, a·v^{k−2}w², …).
struct BetaBlocks {
    PadicMatrix primitive;
    PadicMatrix constants;
    PadicMatrix full;
};
BetaBlocks beta_matrix_primitive(const PadicRing& R, u64 k, i64 prec);

// Working precision for the fibre Frobenius entries (in π-digits) so that
// reduction losses — one π-digit per pass plus chain slack — still leave
// `prec` certified digits, and a ring storage that accommodates it.
i64 sympow_frob_prec(u64 p, u64 k, i64 prec);
i64 sympow_storage(u64 p, u64 k, i64 prec);

// M_k(T) = det(1 − T·β̄_k | primitive), odd k < p, certified mod π^prec.
PadicPoly mk_padic(const PadicRing& R, u64 k, i64 prec);
PadicPoly mk_padic(u64 p, u64 k, i64 prec);

// Even k ≥ 2 (and odd k, where it is trivial = 1): the factor N_k(T) with
// multiplicities m_k (total) and n_k (the subtlety for p ≡ 3 mod 4); linear
// factors 1 ∓ u^{k/2} T with u ∈ {p, ±g}, g the quadratic Gauss sum, by the
// six-way case split on p mod 12 and k mod 4.
struct TrivialFactor {
    CycloPoly poly;
    i64 m_k = 0;
    i64 n_k = 0;
};
TrivialFactor trivial_factor(u64 k, u64 p);

// Functional-equation check: find the constant c with
//     c_m · p^{(k+1)(δ−m)} = c · c_{δ−m}   for all m   (δ = degree),
// and return it; throws FEViolation at the first failing index.  The p-adic
// variant certifies the identities mod π^prec.
CycloElem check_fe(const CycloPoly& M, u64 k);
PadicElem check_fe(const PadicPoly& M, u64 k, i64 prec);

// dim ker(G_k) over the truncated-coefficient module: closed formula vs
// direct count of annihilated basis lines.
u64 sym_kernel_dim_formula(u64 k, u64 p);
u64 sym_kernel_dim_count(u64 k, u64 p);

// Exact combinatorial identities underpinning the chains; throws
// IdentityFailure with a counterexample description if any check fails.
struct IdentityReport {
    u64 combo_cases = 0;    // Σ_j C(n,j)²/C(2n,2j) = (2^n n!)²/(2n)!
    u64 binsum_cases = 0;   // signed permanent of binomial matrices
    u64 detnk_cases = 0;    // symbolic det N_k, k ∈ {2, 4, 6}
    u64 kernel_cases = 0;   // kernel dimension formula vs count
    u64 fermat_cases = 0;   // κ^p ∓ κ criterion by p mod 12
};
IdentityReport identity_suite(u64 nmax, u64 dmax, u64 kmax);

}  // namespace expsum

#endif  // EXPSUM_SYMPOW_HPP
