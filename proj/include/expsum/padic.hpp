// expsum — truncated arithmetic in the ramified tower W(F_{p^s})[π],
// π^{p−1} = −p.
//
// An element is Σ_{j=0}^{p−2} c_j π^j with c_j ∈ W(F_{p^s}) represented in
// the Y-power basis lifted from the canonical F_{p^s} modulus; every
// coordinate is kept modulo p^{N0}.  Because 1, π, ..., π^{p−2} is a free
// W-basis and the extension is totally ramified, the π-adic valuation of an
// element is min_j ( j + (p−1)·v_p(c_j) ) — computable exactly from the
// stored digits, never by approximation.
//
// Precision model: each element carries cert, the number of π-digits through
// which its stored value is certified (stored = true + O(π^cert)).  Addition
// takes the min of certs; multiplication uses the standard interval rule;
// division by π^t lowers cert by t and requires the affected digits to be
// exactly divisible.  Operations that would leave no certified digits throw
// PrecisionExhausted instead of returning silently degraded values.

#ifndef EXPSUM_PADIC_HPP
#define EXPSUM_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "expsum/cyclo.hpp"
#include "expsum/ff.hpp"
#include "expsum/rational.hpp"

namespace expsum {

class PadicRing;

class PadicElem {
  public:
    PadicElem() : R_(nullptr), cert_(0) {}

    const PadicRing& ring() const;
    i64 cert() const { return cert_; }
    // certified zero test: all digits vanish through π^cert
    bool is_zero() const;
    // exact π-adic valuation in π-digits; throws PrecisionExhausted when the
    // element is indistinguishable from 0 at its certified precision
    i64 pi_valuation() const;
    // certified lower bound min(raw valuation, cert); always available
    i64 pi_val_floor() const;
    // ord_p = pi_valuation/(p−1) as an exact rational
    Rat valuation() const;
    // is ord ≥ m π-digits a *certified* statement for this element?
    bool ord_at_least(i64 m) const;

    PadicElem operator-() const;
    friend PadicElem operator+(const PadicElem& a, const PadicElem& b);
    friend PadicElem operator-(const PadicElem& a, const PadicElem& b);
    friend PadicElem operator*(const PadicElem& a, const PadicElem& b);
    PadicElem& operator+=(const PadicElem& b) { return *this = *this + b; }
    PadicElem& operator-=(const PadicElem& b) { return *this = *this - b; }
    PadicElem& operator*=(const PadicElem& b) { return *this = *this * b; }
    // equality = agreement through the shared certified precision
    friend bool operator==(const PadicElem& a, const PadicElem& b) {
        return (a - b).is_zero();
    }

    PadicElem scaled_int(i64 n) const;
    PadicElem pow_u64(u64 e) const;
    PadicElem inv() const;               // NotAUnit on non-units
    PadicElem div_exact(const PadicElem& b) const;
    PadicElem mul_pi(i64 t) const;       // · π^t, t ≥ 0
    PadicElem div_pi(i64 t) const;       // / π^t, t ≥ 0; DivisionInexact
    PadicElem with_cert(i64 c) const;    // explicitly weaken the certificate

    std::string str(i64 max_digits = -1) const;

  private:
    friend class PadicRing;
    friend PadicElem hensel_sqrt(const PadicElem& a);
    friend PadicElem embed_prime_subring(const PadicElem& x, const PadicRing& R2);

    const PadicRing* R_;
    std::vector<u64> c_;  // (p−1)·s coords: c_[j*s + l] = digit j, Y^l
    i64 cert_;

    explicit PadicElem(const PadicRing& R);
    void check_compat(const PadicElem& b) const;
    i64 raw_pi_valuation() const;  // from stored digits; large sentinel if 0
};

// ord(a − b) ≥ m, as a certified statement (throws PrecisionExhausted if
// either side is not certified through m digits).
bool agree_mod(const PadicElem& a, const PadicElem& b, i64 m);

class PadicRing {
  public:
    // storage_pi_digits: total retained precision (p−1)·N0 is the smallest
    // multiple of p−1 that is ≥ this.  Throws TooLarge if p^{N0} ≥ 2^62.
    PadicRing(u64 p, u64 s, i64 storage_pi_digits);
    PadicRing(const PadicRing&) = delete;
    PadicRing& operator=(const PadicRing&) = delete;

    u64 p() const { return p_; }
    u64 s() const { return s_; }
    u64 q() const { return ff_.q(); }
    i64 N0() const { return N0_; }
    u64 pN0() const { return pN0_; }
    i64 prec() const { return (i64)(p_ - 1) * N0_; }  // storage capacity, π-digits
    const FqCtx& ff() const { return ff_; }

    PadicElem zero() const;
    PadicElem one() const;
    PadicElem pi() const;
    PadicElem from_int(i64 n) const;
    PadicElem from_mpz(const mpz_class& n) const;
    PadicElem from_ff(const FqElem& x) const;  // naive digit-0 lift
    // reduction of the digit-0 coordinate to the residue field
    FqElem residue(const PadicElem& x) const;

    // π^r / r!  — exact: (−1)^a p^{(S_p(r)−b)/(p−1)} unit(r!)^{−1} π^b with
    // r = a(p−1)+b; the p-power may exceed storage, giving certified 0.
    PadicElem pi_pow_over_fact(u64 r) const;

    // Teichmüller lift: x ≡ x̄ mod p and x^q = x exactly in the truncation.
    PadicElem teichmuller(const FqElem& xbar) const;

    // Dwork splitting function θ(t) = exp(π(t − t^p)): cached coefficients
    // and evaluation at integral arguments (certified tail drop via
    // ord θ_i ≥ (p−1)²·i/p² π-digits).
    PadicElem theta_coeff(u64 i) const;
    PadicElem theta_eval(const PadicElem& t) const;

    // ζ_p := θ(1), the pinned primitive p-th root of unity (cached).
    PadicElem zeta_p() const;

  private:
    friend class PadicElem;
    friend PadicElem operator*(const PadicElem& a, const PadicElem& b);
    u64 p_, s_;
    i64 N0_;
    u64 pN0_;
    FqCtx ff_;
    std::vector<u64> modlift_;  // monic modulus coefficients c_0..c_{s−1}
    mutable std::vector<PadicElem> theta_cache_;
    mutable std::vector<u64> fact_unit_cache_;  // unit part of r! mod p^{N0}
    mutable std::optional<PadicElem> zeta_cache_;

    void ensure_theta(u64 n) const;
    u64 fact_unit(u64 r) const;

    void wmul(u64* out, const u64* a, const u64* b) const;  // W(F_q) product
    std::vector<u64> mul_digits(const std::vector<u64>& a,
                                const std::vector<u64>& b) const;
};

// Process-wide interned rings keyed by (p, s, storage): stable addresses for
// the lifetime of the process, so returned values can safely outlive scopes.
const PadicRing& padic_ring_cache(u64 p, u64 s, i64 storage_pi_digits);

struct SplittingCoeffs {
    std::vector<PadicElem> theta;  // θ_0 .. θ_n
};

SplittingCoeffs splitting_coeffs(const PadicRing& R, u64 n);

// g_s(j) = −Σ_{t^{q−1}=1} t^{−j} θ(t)θ(t^p)···θ(t^{p^{s−1}}), q = p^s.
PadicElem gauss_sum(const PadicRing& R, i64 j);

// Ring homomorphism Z[ζ_p] → R determined by ζ_p ↦ θ(1).
PadicElem embed_padic(const CycloElem& x, const PadicRing& R);

// Transport along W(F_p)[π] ⊂ W(F_{p^s})[π] (source ring must have s = 1).
PadicElem embed_prime_subring(const PadicElem& x, const PadicRing& R2);

// exp and log restricted to their convergence domains (ord(x) ≥ 2 π-digits,
// resp. ord(x−1) ≥ 2); NonConvergent outside them.
PadicElem padic_exp(const PadicElem& x);
PadicElem padic_log(const PadicElem& x);

// Square root of a unit whose residue is a square, by Newton iteration from
// the smallest-index residue root.  Throws NotAUnit / HypothesisFailed.
PadicElem hensel_sqrt(const PadicElem& a);

// κ = 2i/(3√3) (κ² = −4/27) lives in the unramified part of degree:
u64 kappa_ring_degree(u64 p);  // 1 if p ≡ 1 mod 12, else 2
PadicElem kappa(const PadicRing& R);

}  // namespace expsum

#endif  // EXPSUM_PADIC_HPP
