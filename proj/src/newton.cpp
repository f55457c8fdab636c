#include "expsum/newton.hpp"

#include <algorithm>

namespace expsum {

std::vector<Rat> NPolygon::slope_list() const {
    std::vector<Rat> out;
    for (const auto& [s, m] : slopes)
        for (i64 i = 0; i < m; ++i) out.push_back(s);
    return out;
}

NPolygon newton_polygon(const std::vector<std::optional<Rat>>& vals) {
    if (vals.empty() || !vals[0])
        throw EmptyInput("polygon needs a finite constant-term valuation");
    std::vector<std::pair<i64, Rat>> pts;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i]) pts.push_back({(i64)i, *vals[i]});

    NPolygon np;
    for (const auto& pt : pts) {
        while (np.vertices.size() >= 2) {
            const auto& [i1, v1] = np.vertices[np.vertices.size() - 2];
            const auto& [i2, v2] = np.vertices.back();
            // keep the hull strictly convex: pop the middle point when the
            // slope does not increase across it
            if ((v2 - v1) * Rat(pt.first - i2) >= (pt.second - v2) * Rat(i2 - i1))
                np.vertices.pop_back();
            else
                break;
        }
        np.vertices.push_back(pt);
    }
    for (size_t i = 1; i < np.vertices.size(); ++i) {
        i64 di = np.vertices[i].first - np.vertices[i - 1].first;
        Rat s = (np.vertices[i].second - np.vertices[i - 1].second) / Rat(di);
        np.slopes.push_back({s, di});
    }
    return np;
}

std::vector<std::optional<Rat>> poly_ordp(const PadicPoly& f) {
    std::vector<std::optional<Rat>> out;
    for (size_t i = 0; i < f.len(); ++i) {
        PadicElem c = f.coeff(i);
        if (c.is_zero())
            out.push_back(std::nullopt);
        else
            out.push_back(c.valuation());
    }
    return out;
}

std::vector<std::optional<Rat>> poly_ordp(const CycloPoly& f) {
    std::vector<std::optional<Rat>> out;
    i64 d = f.degree();
    for (i64 i = 0; i <= d; ++i) {
        i64 v = pi_valuation(f.coeff((size_t)i));
        if (v < 0)
            out.push_back(std::nullopt);
        else
            out.push_back(Rat(v, (i64)(f.p() - 1)));
    }
    return out;
}

std::vector<Rat> predicted_fibre_slopes(u64 d, u64 p) {
    if (d < 2 || d % p == 0) throw HypothesisFailed("need p coprime to d");
    if (!((d == 3 && p >= 5) || (d >= 4 && p >= d + 6)))
        throw HypothesisFailed("slope formula needs d=3, p>=5 or p >= d+6");
    std::vector<Rat> out;
    for (u64 j = 1; j <= d - 1; ++j) {
        u64 tau = (p * j) % d;  // τ_p(j) ∈ {1..d−1} since gcd(p,d)=1, d∤pj
        Rat s = Rat((i64)j) - Rat((i64)(d - 1), (i64)(p - 1)) *
                                  Rat((i64)(p * j - tau), (i64)d);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundReport check_lower_bound(const std::vector<std::optional<Rat>>& ord, u64 k,
                              u64 p) {
    if (k % 2 == 0) throw OddK("bound stated for odd k");
    if (k >= p) throw KTooLarge("bound stated for k < p");
    BoundReport rep;
    const Rat c((i64)(p - 1) * (i64)(p - 1), 3 * (i64)(p * p));
    for (size_t m = 0; m < ord.size(); ++m) {
        i64 q = (i64)m * (i64)m + (i64)m + (i64)m * (i64)k;
        Rat b = c * Rat(q);
        // Theorem-1.1 form (m² + (k+1)m): identical, kept as a consistency pin
        if (b != c * Rat((i64)m * (i64)m + ((i64)k + 1) * (i64)m))
            throw IdentityFailure("quadratic bound forms disagree");
        Rat of = ord[m] ? *ord[m] : Rat(1'000'000'000L);
        rep.ord_floor.push_back(of);
        rep.bound.push_back(b);
        rep.margin.push_back(of - b);
        rep.conj_margin.push_back(of - Rat(q, 3));
        if (of < b) rep.pass = false;
    }
    return rep;
}

BoundReport check_lower_bound(const PadicPoly& M, u64 k, u64 p) {
    // certified-zero coefficients enter through their floor, which is sound
    std::vector<std::optional<Rat>> ord;
    for (size_t i = 0; i < M.len(); ++i) {
        PadicElem c = M.coeff(i);
        if (c.is_zero())
            ord.push_back(Rat(c.cert(), (i64)(p - 1)));
        else
            ord.push_back(c.valuation());
    }
    return check_lower_bound(ord, k, p);
}

BoundReport check_lower_bound(const CycloPoly& M, u64 k, u64 p) {
    return check_lower_bound(poly_ordp(M), k, p);
}

}  // namespace expsum
