#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "expsum/oracle.hpp"

using namespace expsum;

TEST_CASE("level-1 sums by hand: cubes mod 5 and mod 7") {
    FqCtx F5(5, 1), F7(7, 1);
    // gcd(3, 4) = 1, so x³ permutes F_5 and the sum telescopes to 0
    CHECK(char_sum(F5, F5.zero(), 1, 3).is_zero());
    // cubes mod 7: 0 once, {1,6} three times each
    CycloElem s = char_sum(F7, F7.zero(), 1, 3);
    CycloElem expect = CycloElem::from_int(7, 1) +
                       CycloElem::zeta_power(7, 1).scaled(3) +
                       CycloElem::zeta_power(7, 6).scaled(3);
    CHECK(s == expect);
}

TEST_CASE("sums of the odd family are fixed by complex conjugation") {
    FqCtx F7(7, 1);
    for (u64 n = 0; n < 7; ++n) {
        CycloElem s = char_sum(F7, F7.from_index(n), 1, 3);
        CHECK(conj(s) == s);
    }
}

TEST_CASE("embed_into: roots, conjugacy, constants") {
    FqCtx F(5, 2), G(5, 4);
    FqElem x = F.generator();
    FqElem y = embed_into(F, x, G);
    CHECK(G.degree_over_prime(y) == 2);
    // embeddings of prime-field constants are the constants
    CHECK(embed_into(F, F.from_u64(3), G) == G.from_u64(3));
    CHECK(embed_into(F, F.zero(), G) == G.zero());
    // embed(x²) is a Frobenius conjugate of embed(x)²
    FqElem y2 = embed_into(F, F.mul(x, x), G);
    bool conjugate = false;
    FqElem z = G.mul(y, y);
    for (unsigned k = 0; k < G.s(); ++k, z = G.frobenius(z))
        if (z == y2) conjugate = true;
    CHECK(conjugate);
    // traces agree along any embedding of a trace-compatible level
    CHECK_THROWS_AS(embed_into(F, x, FqCtx(5, 3)), FieldMismatch);
    CHECK_THROWS_AS(embed_into(F, x, FqCtx(7, 2)), FieldMismatch);
}

TEST_CASE("character sums only see the Frobenius orbit of the parameter") {
    FqCtx F(5, 2);
    for (u64 n : {3u, 11u, 17u}) {
        FqElem lam = F.from_index(n);
        for (u64 m = 1; m <= 2; ++m)
            CHECK(char_sum(F, lam, m, 3) == char_sum(F, F.frobenius(lam), m, 3));
    }
}

TEST_CASE("fibre L-polynomials: degree, FE, Weil bound") {
    FqCtx F7(7, 1);
    for (u64 n = 0; n < 7; ++n) {
        CycloPoly L = fibre_L_exact(F7, F7.from_index(n), 3);
        CHECK(L.degree() == 2);
        CHECK(L.coeff(0) == CycloElem::from_int(7, 1));
        CHECK(L.has_real_coefficients());
        check_fe_exact(L, 1);           // weight = s = 1: throws on failure
        CHECK(weil_check(L, std::sqrt(7.0)));
    }
    // a degree-2 fibre: weight 2, |roots⁻¹| = 5
    FqCtx F25(5, 2);
    CycloPoly L = fibre_L_exact(F25, F25.generator(), 3);
    CHECK(L.degree() == 2);
    check_fe_exact(L, 2);
    CHECK(weil_check(L, 5.0));
    // log round trip: the S_m are recovered from the polynomial
    std::vector<CycloElem> b = log_coeffs_from_poly(L, 2);
    CHECK(b[0] == char_sum(F25, F25.generator(), 1, 3));
    CHECK(b[1] == char_sum(F25, F25.generator(), 2, 3));
}

TEST_CASE("batch tables match per-fibre enumeration") {
    for (auto [p, e] : {std::pair<u64, unsigned>{5, 1}, {7, 1}, {5, 2}}) {
        AllFibreSums afs(p, e);
        const FqCtx& F = afs.field();
        for (u64 n = 0; n < F.q(); ++n) {
            FqElem lam = F.from_index(n);
            CHECK(afs.s1(lam) == char_sum(F, lam, 1, 3));
            CHECK(afs.s2(lam) == char_sum(F, lam, 2, 3));
            auto [c1, c2] = afs.l_coeffs(lam);
            CycloPoly L = fibre_L_exact(F, lam, 3);
            CHECK(c1 == L.coeff(1));
            CHECK(c2 == L.coeff(2));
        }
    }
}

TEST_CASE("batch tables in a cubic extension (spot checks)") {
    // F_{7^3}: spot-check a handful of fibres against direct enumeration
    AllFibreSums afs(7, 3);
    const FqCtx& F = afs.field();
    for (u64 n : {0u, 1u, 19u, 100u, 342u}) {
        FqElem lam = F.from_index(n);
        CHECK(afs.s1(lam) == char_sum(F, lam, 1, 3));
        CHECK(afs.s2(lam) == char_sum(F, lam, 2, 3));
    }
}

TEST_CASE("power sums: closed forms and degenerate k") {
    // N_1 = −p: the λ-sum kills every x except x = 0
    for (u64 p : {5u, 7u, 11u}) {
        std::vector<CycloElem> N = mk_power_sums(p, 1, 1);
        CHECK(N[0] == CycloElem::from_int(p, -(i64)p));
    }
    // k = 0: every fibre contributes 1 per point, N_s = p^s
    std::vector<CycloElem> N0 = mk_power_sums(7, 0, 2);
    CHECK(N0[0] == CycloElem::from_int(7, 7));
    CHECK(N0[1] == CycloElem::from_int(7, 49));
}

TEST_CASE("power sums against a direct closed-point accumulation") {
    // independent N_2 for p=5, k=3: sum h_3 over F_5 fibres at t = 2 plus
    // the degree-2 points at t = 1, everything through fibre_L_exact only
    u64 p = 5, k = 3;
    FqCtx F1(p, 1), F2(p, 2);
    CycloElem n2 = CycloElem::zero(p);
    auto h_direct = [&](const CycloPoly& L, u64 t) {
        // σ1 = π₁^t + π₂^t, σ2 = (π₁π₂)^t from c1, c2; then h_k by recurrence
        CycloElem c1 = L.coeff(1), c2 = L.coeff(2);
        CycloElem Pp = CycloElem::from_int(p, 2), Pc = -c1, s2 = CycloElem::from_int(p, 1);
        for (u64 i = 0; i < t; ++i) s2 = s2 * c2;
        for (u64 i = 1; i < t; ++i) {
            CycloElem Pn = -(c1 * Pc) - c2 * Pp;
            Pp = Pc;
            Pc = Pn;
        }
        CycloElem h0 = CycloElem::from_int(p, 1), h1 = Pc;
        if (k == 0) return h0;
        for (u64 j = 2; j <= k; ++j) {
            CycloElem h2 = Pc * h1 - s2 * h0;
            h0 = h1;
            h1 = h2;
        }
        return h1;
    };
    for (u64 n = 0; n < p; ++n)
        n2 += h_direct(fibre_L_exact(F1, F1.from_index(n), 3), 2);
    for (u64 n = 0; n < F2.q(); ++n) {
        FqElem lam = F2.from_index(n);
        if (F2.degree_over_prime(lam) != 2) continue;
        n2 += h_direct(fibre_L_exact(F2, lam, 3), 1);
    }
    std::vector<CycloElem> N = mk_power_sums(p, k, 2);
    CHECK(N[1] == n2);
}

TEST_CASE("M_1 = 1 − pT") {
    for (u64 p : {5u, 7u, 11u, 13u}) {
        CycloPoly M = mk_exact_poly(p, 1);
        CHECK(M.degree() == 1);
        CHECK(M.coeff(0) == CycloElem::from_int(p, 1));
        CHECK(M.coeff(1) == CycloElem::from_int(p, -(i64)p));
    }
}

TEST_CASE("M_3 at p=7: degree, FE, subfield, c_1 valuation") {
    CycloPoly M = mk_exact_poly(7, 3);
    CHECK(M.degree() == 2);
    check_fe_exact(M, 4);  // weight k+1
    // p ≡ 1 mod 3: coefficients lie in the cubic subfield of Q(ζ_7)
    for (size_t i = 0; i <= 2; ++i) CHECK(in_index_r_subfield(M.coeff(i), 3));
    // ord_7(c_1) = 5/3, i.e. 10 π-digits
    CHECK(pi_valuation(M.coeff(1)) == 10);
}

TEST_CASE("M_3 at p=5: rational integer coefficients") {
    CycloPoly M = mk_exact_poly(5, 3);
    CHECK(M.degree() == 2);
    check_fe_exact(M, 4);
    for (size_t i = 0; i <= 2; ++i) CHECK(M.coeff(i).is_rational_integer());
}

TEST_CASE("guards: level cap, p | d, even k") {
    FqCtx F(5, 1);
    CHECK_THROWS_AS(char_sum(F, F.zero(), 1, 5), HypothesisFailed);
    CHECK_THROWS_AS(char_sum(F, F.zero(), 15, 3), TooLarge);
    CHECK_THROWS_AS(mk_exact_poly(7, 4), OddK);
    CHECK_THROWS_AS(mk_exact_poly(7, 9), KTooLarge);
    CHECK_THROWS_AS(AllFibreSums(3, 1), HypothesisFailed);
}
