// expsum — exact polynomials over Z[ζ_p]: the carrier type for L-functions
// computed by character-sum enumeration.
//
// A CycloPoly is a coefficient vector c_0 + c_1 T + ... over CycloElem.
// Everything here is exact integer arithmetic except the complex-embedding
// root moduli, which feed only the archimedean (Weil) inequality checks.

#ifndef EXPSUM_LPOLY_HPP
#define EXPSUM_LPOLY_HPP

#include <complex>
#include <string>
#include <vector>

#include "expsum/cyclo.hpp"

namespace expsum {

class CycloPoly {
  public:
    CycloPoly() : p_(0) {}
    explicit CycloPoly(u64 p) : p_(p) {}  // zero polynomial
    CycloPoly(u64 p, std::vector<CycloElem> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (const auto& x : c_)
            if (x.p() != p_) throw FieldMismatch("coefficient from wrong Z[zeta_p]");
    }

    u64 p() const { return p_; }
    // highest index with nonzero coefficient; -1 for the zero polynomial
    i64 degree() const;
    size_t size() const { return c_.size(); }
    CycloElem coeff(size_t i) const;  // 0 beyond stored length
    void set_coeff(size_t i, const CycloElem& v);
    const std::vector<CycloElem>& coeffs() const { return c_; }

    static CycloPoly one(u64 p);
    // 1 + c1 T  (degree-one factor with unit constant term)
    static CycloPoly linear(u64 p, const CycloElem& c1);

    friend CycloPoly operator+(const CycloPoly& a, const CycloPoly& b);
    friend CycloPoly operator-(const CycloPoly& a, const CycloPoly& b);
    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
    friend bool operator==(const CycloPoly& a, const CycloPoly& b);

    // coefficient-wise complex conjugation σ_{-1}
    CycloPoly conjugated() const;
    bool has_real_coefficients() const;  // fixed by σ_{-1}

    // Σ c_m num^m den^(deg-m): the value of f at num/den, cleared of
    // denominators by den^deg.  f(num/den) = 0  ⟺  eval_scaled = 0.
    CycloElem eval_scaled(const mpz_class& num, const mpz_class& den) const;

    std::string str() const;

  private:
    u64 p_;
    std::vector<CycloElem> c_;
};

// The polynomial exp(Σ_{s≥1} b_s T^s / s) truncated at degree `deg`:
// coefficients via m·c_m = Σ_{s=1}^m b_s c_{m−s} with exact division by m.
// Throws DivisionInexact if some c_m fails to be integral (the series is
// then not the log-expansion of a Z[ζ]-polynomial).
CycloPoly poly_from_log_coeffs(u64 p, const std::vector<CycloElem>& b, size_t deg);

// Inverse direction: b_1..b_n with f = exp(Σ b_s T^s/s) formally,
// i.e. b_m = m·c_m − Σ_{s=1}^{m−1} b_s c_{m−s}.  Requires c_0 = 1.
std::vector<CycloElem> log_coeffs_from_poly(const CycloPoly& f, size_t n);

// Exact quotient A / B for B with unit constant term B(0) = 1: computes the
// power-series quotient to degree deg(A) − deg(B) and verifies B·Q = A.
// Throws DivisionInexact if B does not divide A exactly.
CycloPoly divide_exact(const CycloPoly& A, const CycloPoly& B);

// Functional-equation check: with δ = deg M and c_0 = 1, verifies
//   c_δ · conj(c_{δ−m}) = c_m · (p^w)^{δ−m}   for all m = 0..δ,
// i.e. c T^δ conj(M)(p^{−w} T^{−1}) = M(T) with constant c = c_δ.
// Returns c; throws FEViolation (with the failing index) otherwise.
CycloElem check_fe_exact(const CycloPoly& M, u64 w);

// Roots of Σ coeffs[m] z^m by Durand–Kerner; leading zero coefficients are
// trimmed at magnitude `trim`.  Intended for the small degrees (≤ 5) that
// occur here.
std::vector<std::complex<double>> poly_complex_roots(
    std::vector<std::complex<double>> coeffs, double trim = 1e-9);

// |1/root| for every root of f under the embedding ζ ↦ e^{2πit/p}.
std::vector<double> reciprocal_root_moduli(const CycloPoly& f, u64 t);

// Archimedean (Weil) check: every reciprocal root of f, under every complex
// embedding, has absolute value `target` to relative tolerance rel_tol.
bool weil_check(const CycloPoly& f, double target, double rel_tol = 1e-6);

}  // namespace expsum

#endif  // EXPSUM_LPOLY_HPP
