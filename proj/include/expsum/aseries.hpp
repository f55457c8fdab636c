// expsum — power series in the fibre parameter a with p-adic coefficients
// and a certified growth floor.
//
// A PadicSeriesA represents  π^{−pishift} · Σ_i B_i a^i  with every stored
// B_i integral (a PadicElem).  The lazy π-denominator lets cohomology
// reductions divide by π without eagerly eroding per-digit certificates;
// the cost is paid once, when a value is materialized.
//
// Growth certificate: the represented value satisfies
//     ord_p(coefficient of a^i) ≥ slope·i + rho,   slope = b′(1 − 1/d),
// with b′ = (p−1)/p².  The floor is verified on construction (an element
// with certified digits strictly below its floor is a hard error) and is
// maintained soundly through arithmetic: min under addition, sum under
// multiplication.
//
// Tail semantics: a series is either *entire* — absent coefficients are
// exact zeros (the normal case: every object in the Frobenius pipeline is a
// polynomial at fixed precision) — or explicitly truncated, in which case
// absent coefficients are unknown but still obey the growth floor, and
// evaluation caps its certificate accordingly.

#ifndef EXPSUM_ASERIES_HPP
#define EXPSUM_ASERIES_HPP

#include <string>
#include <vector>

#include "expsum/padic.hpp"
#include "expsum/rational.hpp"

namespace expsum {

class PadicSeriesA {
  public:
    PadicSeriesA() : R_(nullptr), d_(0), pishift_(0), entire_(true) {}

    // Builds π^{−pishift} Σ stored[i] a^i and verifies the growth floor.
    // Throws IdentityFailure if some certified coefficient sits below it.
    PadicSeriesA(const PadicRing& R, u64 d, std::vector<PadicElem> stored,
                 Rat rho, i64 pishift = 0, bool entire = true);

    static PadicSeriesA zero(const PadicRing& R, u64 d, Rat rho);
    static PadicSeriesA constant(const PadicRing& R, u64 d, const PadicElem& c,
                                 Rat rho);

    const PadicRing& ring() const;
    u64 d() const { return d_; }
    size_t len() const { return stored_.size(); }  // retained a-degrees
    bool entire() const { return entire_; }
    i64 pishift() const { return pishift_; }
    Rat rho() const { return rho_; }
    Rat slope() const;  // b′(1−1/d) in ord_p units
    bool is_zero() const;

    // stored (integral) coefficient; exact zero beyond the retained range
    PadicElem stored(size_t i) const;
    // materialized coefficient stored_i / π^{pishift}; DivisionInexact if the
    // value is genuinely non-integral
    PadicElem value(size_t i) const;

    PadicSeriesA operator-() const;
    friend PadicSeriesA operator+(const PadicSeriesA& a, const PadicSeriesA& b);
    friend PadicSeriesA operator-(const PadicSeriesA& a, const PadicSeriesA& b);
    friend PadicSeriesA operator*(const PadicSeriesA& a, const PadicSeriesA& b);
    PadicSeriesA& operator+=(const PadicSeriesA& b) { return *this = *this + b; }
    PadicSeriesA& operator-=(const PadicSeriesA& b) { return *this = *this - b; }

    PadicSeriesA scale(const PadicElem& c) const;
    PadicSeriesA scale_int(i64 n) const;
    PadicSeriesA mul_a_pow(u64 k) const;  // · a^k
    // / a^k: the k low coefficients must be certified zeros (DivisionInexact)
    PadicSeriesA div_a_pow(u64 k) const;
    PadicSeriesA mul_pi(i64 t) const;
    PadicSeriesA div_pi(i64 t) const;  // lazy: only moves the π-denominator
    // a ↦ a^{1/p} on retained coefficients: Σ B_{pi} a^i (the growth floor
    // only improves; the stated one remains sound)
    PadicSeriesA psi_a() const;
    // keep coefficients 0..n−1; marks the series as explicitly truncated
    PadicSeriesA truncate_len(size_t n) const;
    // clear the π-denominator by dividing every stored coefficient
    PadicSeriesA materialize() const;
    // weaken the recorded floor (always sound)
    PadicSeriesA with_rho(Rat r) const;

    // Evaluation at an integral point (|a| ≤ 1).  For a truncated series the
    // certificate is capped by the floor of the first dropped coefficient.
    PadicElem eval(const PadicElem& a) const;

    std::string str(size_t max_terms = 8) const;

  private:
    const PadicRing* R_;
    u64 d_;
    std::vector<PadicElem> stored_;
    Rat rho_;
    i64 pishift_;
    bool entire_;

    PadicSeriesA(const PadicRing& R, u64 d, Rat rho, i64 pishift, bool entire)
        : R_(&R), d_(d), rho_(rho), pishift_(pishift), entire_(entire) {}
    void trim();
    void check_floor() const;
    void check_compat(const PadicSeriesA& b) const;
};

// Certified check that every retained coefficient of s respects
// ord_p ≥ slope·i + required_rho; throws IdentityFailure otherwise.
void verify_floor(const PadicSeriesA& s, Rat required_rho);

}  // namespace expsum

#endif  // EXPSUM_ASERIES_HPP
