// expsum — finite-field arithmetic F_p and F_{p^s}.
//
// F_{p^s} is realized as F_p[Y]/(m(Y)) where m is the canonical modulus:
// the lexicographically smallest monic irreducible polynomial of degree s,
// comparing coefficient tuples (c_{s-1}, ..., c_1, c_0) in ascending order.
// Elements are coefficient vectors (index i = coefficient of Y^i).  The
// canonical modulus makes every serialized element reproducible across runs.

#ifndef EXPSUM_FF_HPP
#define EXPSUM_FF_HPP

#include <cstdint>
#include <vector>

#include "expsum/errors.hpp"

namespace expsum {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime_u64(u64 n);

// ---------------------------------------------------------------- mod p ----

inline u64 addp(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 subp(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulp(u64 a, u64 b, u64 p) { return (u64)((unsigned __int128)a * b % p); }
u64 powp(u64 a, u64 e, u64 p);
u64 invp(u64 a, u64 p);  // throws NotAUnit on gcd(a,p) != 1

// ------------------------------------------------------------------ F_q ----

using FqElem = std::vector<u64>;  // length s, FqElem[i] = coeff of Y^i, in [0,p)

class FqCtx {
  public:
    // Builds F_{p^s} with the canonical modulus.  Throws CompositeP if p is
    // not prime, DegreeZero if s == 0.
    FqCtx(u64 p, unsigned s);

    u64 p() const { return p_; }
    unsigned s() const { return s_; }
    u64 q() const { return q_; }  // p^s (throws TooLarge in ctor if >= 2^63)

    // modulus coefficients c_0..c_{s-1} of m(Y) = Y^s + c_{s-1}Y^{s-1}+...+c_0
    const std::vector<u64>& modulus() const { return mod_; }

    FqElem zero() const { return FqElem(s_, 0); }
    FqElem one() const;
    FqElem from_u64(u64 c) const;           // constant c mod p
    bool is_zero(const FqElem& a) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(const FqElem& a, u64 e) const;
    FqElem inv(const FqElem& a) const;      // throws NotAUnit on 0
    FqElem frobenius(const FqElem& a) const;          // a^p
    FqElem frobenius_iter(const FqElem& a, unsigned k) const;  // a^{p^k}

    // Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{s-1}}, value in [0,p).
    u64 trace_to_prime(const FqElem& a) const;

    // Degree over F_p of the subfield generated by a (smallest e with
    // a^{p^e} = a).
    unsigned degree_over_prime(const FqElem& a) const;

    // Mixed-radix index <-> element: index n corresponds to coefficients
    // n mod p, (n/p) mod p, ... (Y^0 digit first).
    FqElem from_index(u64 n) const;
    u64 to_index(const FqElem& a) const;

    // All q elements in index order.  Throws TooLarge if q > 2^24.
    std::vector<FqElem> enumerate() const;

    // A fixed generator of F_q^* (smallest index whose order is q-1).
    const FqElem& generator() const;

  private:
    u64 p_;
    unsigned s_;
    u64 q_;
    std::vector<u64> mod_;          // c_0..c_{s-1}
    mutable FqElem gen_;            // cached generator (empty until first use)

    void reduce_in_place(std::vector<u64>& a) const;  // degree < 2s-1 -> < s
};

// Carries x ∈ F1 = F_{p^s} into F2 = F_{p^S}: returns a root in F2 of the
// minimal polynomial of x over F_p (computed from the Frobenius orbit of x).
// The root returned is the candidate of smallest index, so the map is
// deterministic, but it identifies x only up to Frobenius conjugacy — use it
// for quantities (traces, character sums, L-polynomials) that are invariant
// under x ↦ x^p.  Requires the same characteristic and deg_{F_p}(x) | S;
// throws FieldMismatch otherwise.
FqElem embed_into(const FqCtx& F1, const FqElem& x, const FqCtx& F2);

// Is the monic polynomial Y^s + c_{s-1}Y^{s-1} + ... + c_0 irreducible
// over F_p?  (c has length s.)
bool is_irreducible_monic(u64 p, const std::vector<u64>& c);

// Prime factorization by trial division (n < 2^63), ascending, with
// multiplicity collapsed: returns distinct primes.
std::vector<u64> distinct_prime_factors(u64 n);

}  // namespace expsum

#endif  // EXPSUM_FF_HPP
