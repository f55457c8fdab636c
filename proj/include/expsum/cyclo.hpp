// expsum — exact arithmetic in Z[ζ_p].
//
// Elements are stored in the canonical power basis 1, ζ, ..., ζ^{p-2}
// (length p-1 integer vector).  Any expression involving ζ^{p-1} is folded
// through ζ^{p-1} = -(1 + ζ + ... + ζ^{p-2}), so equality of elements is
// equality of coefficient vectors.  This is the coefficient ring of every
// exact character-sum computation; valuations at the unique prime above p
// (generated by 1-ζ) are computed exactly, never through a float.

#ifndef EXPSUM_CYCLO_HPP
#define EXPSUM_CYCLO_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "expsum/errors.hpp"
#include "expsum/ff.hpp"
#include "expsum/rational.hpp"

namespace expsum {

mpz_class mpz_from_i128(__int128 v);

class CycloElem {
  public:
    CycloElem() : p_(0) {}
    explicit CycloElem(u64 p) : p_(p), c_(p - 1, 0) {
        if (!is_prime_u64(p)) throw CompositeP("p = " + std::to_string(p));
    }

    u64 p() const { return p_; }
    const std::vector<mpz_class>& coords() const { return c_; }
    mpz_class& operator[](size_t i) { return c_[i]; }
    const mpz_class& operator[](size_t i) const { return c_[i]; }

    static CycloElem zero(u64 p) { return CycloElem(p); }
    static CycloElem from_int(u64 p, const mpz_class& n);
    static CycloElem zeta_power(u64 p, u64 e);  // canonical form of ζ^e

    bool is_zero() const;
    bool is_rational_integer() const;  // lies in Z (all ζ-coordinates zero)
    mpz_class rational_integer() const;  // value if is_rational_integer()

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    CycloElem operator-() const;
    friend bool operator==(const CycloElem& a, const CycloElem& b) = default;

    CycloElem& operator+=(const CycloElem& b) { return *this = *this + b; }
    CycloElem& operator-=(const CycloElem& b) { return *this = *this - b; }

    CycloElem scaled(const mpz_class& n) const;
    // exact division by an integer; throws DivisionInexact otherwise
    CycloElem divided_exact(const mpz_class& n) const;

    std::string str() const;  // human-readable "a0 + a1*z + ..."

  private:
    u64 p_;
    std::vector<mpz_class> c_;

    void check_compat(const CycloElem& b) const;
};

// Fold a length-p vector of multiplicities (index = exponent of ζ mod p)
// into a canonical element: Σ_t counts[t] ζ^t.
CycloElem zeta_accumulate(u64 p, const std::vector<mpz_class>& counts);
CycloElem zeta_accumulate_i64(u64 p, const std::vector<i64>& counts);
CycloElem zeta_accumulate_i128(u64 p, const std::vector<__int128>& counts);

// Multiset form: Σ ζ^e over the listed exponents (each reduced mod p here).
CycloElem zeta_accumulate_multiset(u64 p, const std::vector<u64>& exponents);

// Galois action σ_t : ζ -> ζ^t for t in (Z/p)^*.  Throws NotAUnit if p | t.
CycloElem galois_apply(const CycloElem& a, u64 t);

// Complex conjugation σ_{p-1}.
CycloElem conj(const CycloElem& a);

// Smallest primitive root mod p.
u64 primitive_root(u64 p);

// Does a lie in the subfield of Q(ζ_p) of degree r over Q?  (r must divide
// p-1; the subfield is the fixed field of the order-(p-1)/r subgroup of
// Galois, i.e. of σ_{g^r} for a primitive root g.)  Throws BadIndex if
// r does not divide p-1.
bool in_index_r_subfield(const CycloElem& a, u64 r);

// Exact valuation at the prime (1-ζ) above p, in π-digits: ord_p(a) equals
// pi_valuation(a)/(p-1).  Returns -1 for a = 0 (infinite valuation).
i64 pi_valuation(const CycloElem& a);

// All complex absolute values |σ_t(a)| for t = 1..p-1 (double precision).
std::vector<double> complex_abs_all(const CycloElem& a);

}  // namespace expsum

#endif  // EXPSUM_CYCLO_HPP
