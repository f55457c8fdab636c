#include <cmath>
#include <random>

#include "doctest.h"
#include "expsum/cyclo.hpp"

using namespace expsum;

namespace {
CycloElem random_elem(std::mt19937_64& rng, u64 p, int span = 20) {
    CycloElem x(p);
    std::uniform_int_distribution<int> d(-span, span);
    for (size_t i = 0; i + 1 < p; ++i) x[i] = d(rng);
    return x;
}
}  // namespace

TEST_CASE("canonicalization of zeta powers") {
    u64 p = 7;
    // ζ^{p-1} = -(1 + ζ + ... + ζ^{p-2})
    CycloElem top = CycloElem::zeta_power(p, p - 1);
    CycloElem expect(p);
    for (size_t i = 0; i + 1 < p; ++i) expect[i] = -1;
    CHECK(top == expect);
    // Σ over all p-th roots of unity vanishes
    CycloElem s(p);
    for (u64 e = 0; e < p; ++e) s += CycloElem::zeta_power(p, e);
    CHECK(s.is_zero());
    // ζ^a · ζ^b = ζ^{a+b mod p}
    for (u64 a = 0; a < p; ++a)
        for (u64 b = 0; b < p; ++b)
            CHECK(CycloElem::zeta_power(p, a) * CycloElem::zeta_power(p, b) ==
                  CycloElem::zeta_power(p, a + b));
}

TEST_CASE("zeta_accumulate examples") {
    u64 p = 7;
    // {0,1,...,p-1} -> 0
    std::vector<u64> all;
    for (u64 e = 0; e < p; ++e) all.push_back(e);
    CHECK(zeta_accumulate_multiset(p, all).is_zero());
    // {0} -> 1
    CHECK(zeta_accumulate_multiset(p, {0}) == CycloElem::from_int(p, 1));
    // 1 + 3ζ + 3ζ^6 in canonical coordinates: fold gives -2 -3ζ² -3ζ³ -3ζ⁴ -3ζ⁵
    CycloElem v = zeta_accumulate_multiset(p, {0, 1, 1, 1, 6, 6, 6});
    CycloElem expect(p);
    expect[0] = -2;
    expect[2] = expect[3] = expect[4] = expect[5] = -3;
    CHECK(v == expect);
    // and it agrees with building the same element from powers
    CycloElem direct = CycloElem::from_int(p, 1) +
                       CycloElem::zeta_power(p, 1).scaled(3) +
                       CycloElem::zeta_power(p, 6).scaled(3);
    CHECK(v == direct);
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(20260825);
    for (u64 p : {5, 7, 11}) {
        for (int it = 0; it < 30; ++it) {
            CycloElem a = random_elem(rng, p), b = random_elem(rng, p), c = random_elem(rng, p);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + (-a) == CycloElem::zero(p));
        }
    }
}

TEST_CASE("galois action: automorphism, composition, inverse") {
    std::mt19937_64 rng(7);
    u64 p = 7;
    for (int it = 0; it < 20; ++it) {
        CycloElem x = random_elem(rng, p), y = random_elem(rng, p);
        CHECK(galois_apply(x, 1) == x);
        CHECK(galois_apply(galois_apply(x, 3), 2) == galois_apply(x, 6));
        CHECK(galois_apply(x * y, 3) == galois_apply(x, 3) * galois_apply(y, 3));
        // σ_λ inverse is σ_{λ^{-1}}: 3·5 = 15 ≡ 1 mod 7
        CHECK(galois_apply(galois_apply(x, 3), 5) == x);
        CHECK(conj(conj(x)) == x);
    }
    CHECK(galois_apply(CycloElem::zeta_power(p, 1), 3) == CycloElem::zeta_power(p, 3));
    CHECK_THROWS_AS(galois_apply(CycloElem::zero(p), 7), NotAUnit);
}

TEST_CASE("subfield membership") {
    u64 p = 7;
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(11) == 2);
    CHECK(primitive_root(5) == 2);
    // rational integers lie in every subfield
    for (u64 r : {1, 2, 3, 6})
        CHECK(in_index_r_subfield(CycloElem::from_int(p, 5), r));
    // ζ generates the whole field
    CHECK_FALSE(in_index_r_subfield(CycloElem::zeta_power(p, 1), 3));
    // quadratic Gauss period ζ+ζ²+ζ⁴ spans the degree-2 subfield: fixed by
    // squares (r=2) but moved by the cubic subgroup test r=3
    CycloElem per2 = CycloElem::zeta_power(p, 1) + CycloElem::zeta_power(p, 2) +
                     CycloElem::zeta_power(p, 4);
    CHECK(in_index_r_subfield(per2, 2));
    CHECK_FALSE(in_index_r_subfield(per2, 3));
    // cubic period ζ+ζ⁶ lies in the degree-3 subfield
    CycloElem per3 = CycloElem::zeta_power(p, 1) + CycloElem::zeta_power(p, 6);
    CHECK(in_index_r_subfield(per3, 3));
    CHECK(in_index_r_subfield(per3, 6));  // r=6 is the whole field: always true
    CHECK_THROWS_AS(in_index_r_subfield(per3, 4), BadIndex);
}

TEST_CASE("valuation at the prime above p") {
    u64 p = 7;
    CHECK(pi_valuation(CycloElem::zero(p)) == -1);
    CHECK(pi_valuation(CycloElem::from_int(p, 1)) == 0);
    CHECK(pi_valuation(CycloElem::from_int(p, 3)) == 0);
    // ord(1-ζ) = 1 π-digit; ord(p) = p-1 π-digits; products add
    CycloElem pi1 = CycloElem::from_int(p, 1) - CycloElem::zeta_power(p, 1);
    CHECK(pi_valuation(pi1) == 1);
    CHECK(pi_valuation(pi1 * pi1) == 2);
    CHECK(pi_valuation(CycloElem::from_int(p, 7)) == 6);
    CHECK(pi_valuation(CycloElem::from_int(p, 49)) == 12);
    CHECK(pi_valuation(pi1.scaled(7)) == 7);
    // (1-ζ^t) is an associate of (1-ζ) for any unit exponent
    for (u64 t = 2; t < p; ++t)
        CHECK(pi_valuation(CycloElem::from_int(p, 1) - CycloElem::zeta_power(p, t)) == 1);
    // valuation is Galois-stable
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; ++it) {
        CycloElem x = random_elem(rng, p);
        if (x.is_zero()) continue;
        CHECK(pi_valuation(galois_apply(x, 3)) == pi_valuation(x));
    }
}

TEST_CASE("complex embeddings") {
    u64 p = 7;
    for (double v : complex_abs_all(CycloElem::from_int(p, 1)))
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    for (double v : complex_abs_all(CycloElem::zeta_power(p, 1)))
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    // |1 + ζ^k| = 2|cos(πk/7)| over the embeddings, as a set; check first one
    auto vals = complex_abs_all(CycloElem::from_int(p, 1) + CycloElem::zeta_power(p, 1));
    const double pi = 3.14159265358979323846;
    for (u64 t = 1; t < p; ++t)
        CHECK(vals[t - 1] == doctest::Approx(2 * std::abs(std::cos(pi * (double)t / 7.0)))
                                  .epsilon(1e-9));
}

TEST_CASE("exact integer division and failures") {
    u64 p = 5;
    CycloElem x = CycloElem::zeta_power(p, 1).scaled(6) + CycloElem::from_int(p, 9);
    CHECK(x.divided_exact(3) == CycloElem::zeta_power(p, 1).scaled(2) + CycloElem::from_int(p, 3));
    CHECK_THROWS_AS(x.divided_exact(2), DivisionInexact);
    CHECK(x.scaled(-4).divided_exact(-4) == x);
}
