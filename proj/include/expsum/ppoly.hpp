// expsum — polynomials in T with p-adic coefficients, and the small dense
// linear algebra (determinants, characteristic polynomials) used to turn
// Frobenius matrices into L-factors.
//
// Characteristic polynomials are computed without any division: det(1 − MT)
// coefficient m is (−1)^m · Σ principal m×m minors, with minors expanded by
// Laplace recursion.  Matrices here are tiny (n ≤ 6 for fibres and symmetric
// powers); the Fredholm path uses the trace/Newton variant where divisions
// are by integers < p, hence units.

#ifndef EXPSUM_PPOLY_HPP
#define EXPSUM_PPOLY_HPP

#include <string>
#include <vector>

#include "expsum/lpoly.hpp"
#include "expsum/padic.hpp"

namespace expsum {

class PadicPoly {
  public:
    PadicPoly() : R_(nullptr) {}
    explicit PadicPoly(const PadicRing& R) : R_(&R) {}
    PadicPoly(const PadicRing& R, std::vector<PadicElem> c);
    static PadicPoly one(const PadicRing& R);

    const PadicRing& ring() const;
    size_t len() const { return c_.size(); }
    i64 degree() const { return (i64)c_.size() - 1; }  // structural degree
    PadicElem coeff(size_t i) const;                   // zero beyond length
    void set_coeff(size_t i, const PadicElem& v);

    PadicPoly operator-() const;
    friend PadicPoly operator+(const PadicPoly& a, const PadicPoly& b);
    friend PadicPoly operator-(const PadicPoly& a, const PadicPoly& b);
    friend PadicPoly operator*(const PadicPoly& a, const PadicPoly& b);

    PadicPoly scale(const PadicElem& c) const;
    PadicPoly scale_T(const PadicElem& c) const;   // T ↦ cT
    PadicPoly truncate_deg(i64 n) const;           // drop T^{n+1} and beyond
    PadicElem eval(const PadicElem& t) const;

    std::string str(i64 max_digits = 6) const;

  private:
    const PadicRing* R_;
    std::vector<PadicElem> c_;
};

// coefficientwise ord(a_i − b_i) ≥ m as a certified statement
bool polys_agree_mod(const PadicPoly& a, const PadicPoly& b, i64 m);

using PadicMatrix = std::vector<std::vector<PadicElem>>;

PadicElem det_small(const PadicMatrix& M);
PadicMatrix mat_mul(const PadicMatrix& A, const PadicMatrix& B);

// det(1 − MT) by principal minors (division-free); n ≤ 8
PadicPoly charpoly_minors(const PadicRing& R, const PadicMatrix& M);

// det(1 − MT) mod T^{tdeg+1} from tr(M^k) via Newton's identities; requires
// tdeg < p so every division is by a unit
PadicPoly charpoly_traces(const PadicRing& R, const PadicMatrix& M, i64 tdeg);

// a/b as a power series mod T^{maxdeg+1}; b(0) must be a unit
PadicPoly power_series_div(const PadicPoly& a, const PadicPoly& b, i64 maxdeg);

// coefficientwise image of an exact cyclotomic polynomial under ζ_p ↦ θ(1)
PadicPoly embed_poly(const CycloPoly& f, const PadicRing& R);

}  // namespace expsum

#endif  // EXPSUM_PPOLY_HPP
