// expsum — Newton polygons over exact rationals, predicted fibre slopes,
// and the quadratic coefficient lower bound for symmetric-power L-functions.
//
// All slope arithmetic is exact rational; floating point never enters.
// A coefficient that is certified zero contributes no point to the hull
// (treated as +∞); the bound checker instead uses its certified floor, which
// is sound but may under-report margins.

#ifndef EXPSUM_NEWTON_HPP
#define EXPSUM_NEWTON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "expsum/lpoly.hpp"
#include "expsum/ppoly.hpp"
#include "expsum/rational.hpp"

namespace expsum {

struct NPolygon {
    std::vector<std::pair<i64, Rat>> vertices;  // lower hull, increasing index
    std::vector<std::pair<Rat, i64>> slopes;    // (slope, multiplicity), nondecreasing

    // multiplicity-expanded slope list (one entry per unit step)
    std::vector<Rat> slope_list() const;
};

// Lower convex hull of {(i, vals[i])}; entries without a value are skipped.
// vals[0] must be present (constant term 1 ⇒ valuation 0).
NPolygon newton_polygon(const std::vector<std::optional<Rat>>& vals);

// ord_p of each coefficient: exact where the coefficient is nonzero,
// absent (∞) where it is certified zero
std::vector<std::optional<Rat>> poly_ordp(const PadicPoly& f);
std::vector<std::optional<Rat>> poly_ordp(const CycloPoly& f);

// ord_p(π_j(z̄)) = j − ((d−1)/(p−1))·(pj − τ_p(j))/d, τ_p(j) ≡ pj mod d in
// {1..d−1}; sorted nondecreasing.  Valid for d = 3, p ≥ 5 and d ≥ 4, p ≥ d+6.
std::vector<Rat> predicted_fibre_slopes(u64 d, u64 p);

// ord(c_m) ≥ (p−1)²/(3p²)·(m² + m + mk) for odd k < p, with margins; the
// equivalent (m² + (k+1)m) form and the conjectural ·/3 target are reported.
struct BoundReport {
    bool pass = true;
    std::vector<Rat> ord_floor;    // certified ord_p per coefficient
    std::vector<Rat> bound;        // proved quadratic bound
    std::vector<Rat> margin;       // ord_floor − bound
    std::vector<Rat> conj_margin;  // ord_floor − (m²+m+mk)/3
};
BoundReport check_lower_bound(const std::vector<std::optional<Rat>>& ord, u64 k,
                              u64 p);
BoundReport check_lower_bound(const PadicPoly& M, u64 k, u64 p);
BoundReport check_lower_bound(const CycloPoly& M, u64 k, u64 p);

}  // namespace expsum

#endif  // EXPSUM_NEWTON_HPP
