#include <random>

#include "doctest.h"
#include "expsum/padic.hpp"

using namespace expsum;

namespace {
u64 digit_sum(u64 n, u64 p) {
    u64 s = 0;
    for (; n; n /= p) s += n % p;
    return s;
}

PadicElem random_unit(std::mt19937_64& rng, const PadicRing& R) {
    // random element with unit digit 0
    PadicElem x = R.from_int((i64)(rng() % (R.p() - 1)) + 1);
    for (u64 j = 1; j + 1 < R.p(); ++j)
        x += R.pi().pow_u64(j).scaled_int((i64)(rng() % R.p()));
    return x;
}
}  // namespace

TEST_CASE("pi^(p-1) = -p bit-exactly") {
    for (u64 p : {5, 7, 11, 13}) {
        PadicRing R(p, 1, 10 * ((i64)p - 1));
        CHECK((R.pi().pow_u64(p - 1) + R.from_int((i64)p)).is_zero());
        CHECK((R.pi().pow_u64(p - 1) + R.from_int((i64)p)).cert() == R.prec());
    }
    PadicRing R2(7, 2, 60);
    CHECK((R2.pi().pow_u64(6) + R2.from_int(7)).is_zero());
}

TEST_CASE("valuation: exactness, multiplicativity, ultrametric") {
    PadicRing R(7, 1, 60);
    CHECK(R.from_int(7).pi_valuation() == 6);
    CHECK(R.from_int(49).pi_valuation() == 12);
    CHECK(R.pi().pi_valuation() == 1);
    CHECK((R.pi() * R.from_int(7)).pi_valuation() == 7);
    CHECK(R.from_int(3).pi_valuation() == 0);
    CHECK_THROWS_AS(R.zero().pi_valuation(), PrecisionExhausted);
    CHECK(R.from_int(7).valuation() == Rat(1));
    CHECK(R.pi().valuation() == Rat(1, 6));
    std::mt19937_64 rng(123);
    for (int it = 0; it < 40; ++it) {
        PadicElem x = random_unit(rng, R).mul_pi((i64)(rng() % 5));
        PadicElem y = random_unit(rng, R).mul_pi((i64)(rng() % 5));
        CHECK((x * y).pi_valuation() == x.pi_valuation() + y.pi_valuation());
        PadicElem s = x + y;
        if (!s.is_zero())
            CHECK(s.pi_valuation() >= std::min(x.pi_valuation(), y.pi_valuation()));
    }
}

TEST_CASE("division by pi and precision accounting") {
    PadicRing R(7, 1, 60);
    PadicElem x = R.from_int(21).mul_pi(2);  // 3·7·π² = −3·π⁸
    CHECK(x.pi_valuation() == 8);
    CHECK(x.div_pi(8).pi_valuation() == 0);
    CHECK(x.div_pi(8).cert() == R.prec() - 8);
    CHECK((x.div_pi(8) + R.from_int(3)).is_zero());
    CHECK_THROWS_AS(R.from_int(3).div_pi(1), DivisionInexact);
    CHECK_THROWS_AS(R.one().with_cert(4).div_pi(4), PrecisionExhausted);
    // div_exact through a non-unit divisor
    PadicElem a = R.from_int(14);  // 2·7
    PadicElem b = R.from_int(7);
    CHECK((a.div_exact(b) - R.from_int(2)).is_zero());
    CHECK_THROWS_AS(R.from_int(3).div_exact(b), DivisionInexact);
}

TEST_CASE("teichmuller lifts") {
    PadicRing R(7, 1, 60);
    const FqCtx& F = R.ff();
    CHECK(R.teichmuller(F.one()) == R.one());
    CHECK(R.teichmuller(F.zero()).is_zero());
    // Teich(3) ≡ 31 mod 49 for p = 7
    CHECK((R.teichmuller(F.from_u64(3)) - R.from_int(31)).ord_at_least(12));
    std::mt19937_64 rng(5);
    for (int it = 0; it < 15; ++it) {
        FqElem a = F.from_u64(1 + rng() % 6), b = F.from_u64(1 + rng() % 6);
        CHECK(R.teichmuller(a) * R.teichmuller(b) == R.teichmuller(F.mul(a, b)));
        CHECK(R.teichmuller(a).pow_u64(7) == R.teichmuller(a));
    }
    PadicRing R2(5, 2, 40);
    for (u64 i = 1; i < 25; ++i) {
        FqElem a = R2.ff().from_index(i);
        CHECK(R2.teichmuller(a).pow_u64(25) == R2.teichmuller(a));
    }
}

TEST_CASE("splitting coefficients") {
    PadicRing R(7, 1, 70);
    auto sc = splitting_coeffs(R, 60);
    CHECK(sc.theta[0] == R.one());
    // θ_i = π^i/i! for i ≤ p−1
    CHECK(sc.theta[3] == R.pi().pow_u64(3).div_exact(R.from_int(6)));
    CHECK(sc.theta[6] == R.pi().pow_u64(6).div_exact(R.from_int(720)));
    // ord(θ_i) ≥ (p−1)i/p² as ord_p, i.e. (p−1)²·i/p² π-digits
    for (u64 i = 0; i <= 60; ++i)
        CHECK(sc.theta[i].pi_val_floor() >=
              std::min<i64>((i64)(36 * i / 49), R.prec()));
}

TEST_CASE("theta is the splitting character: θ(Teich x) = ζ^x") {
    for (u64 p : {5, 7}) {
        PadicRing R(p, 1, 10 * ((i64)p - 1));
        PadicElem zeta = R.zeta_p();
        // Φ_p(ζ) = 0: ζ is a primitive p-th root of unity
        PadicElem phi = R.zero();
        for (u64 i = 0; i < p; ++i) phi += zeta.pow_u64(i);
        CHECK(phi.is_zero());
        CHECK_FALSE((zeta - R.one()).is_zero());
        CHECK((zeta - R.one()).pi_valuation() == 1);  // ζ − 1 ~ −π + higher
        for (u64 x = 1; x < p; ++x)
            CHECK(R.theta_eval(R.teichmuller(R.ff().from_u64(x))) == zeta.pow_u64(x));
    }
    // over F_{p²}: θ(t)θ(t^p) = ζ^{Tr(x̄)}
    PadicRing R(5, 2, 40);
    PadicElem zeta = R.zeta_p();
    const FqCtx& F = R.ff();
    for (u64 i = 1; i < 25; ++i) {
        FqElem x = F.from_index(i);
        PadicElem lhs = R.theta_eval(R.teichmuller(x)) *
                        R.theta_eval(R.teichmuller(F.frobenius(x)));
        CHECK(lhs == zeta.pow_u64(F.trace_to_prime(x)));
    }
}

TEST_CASE("embed_padic is a ring homomorphism pinned by ζ ↦ θ(1)") {
    u64 p = 7;
    PadicRing R(p, 1, 60);
    CHECK(embed_padic(CycloElem::from_int(p, 1), R) == R.one());
    CHECK(embed_padic(CycloElem::zeta_power(p, 1), R) == R.zeta_p());
    // ord_p(1 − ζ) = 1/(p−1)
    CycloElem omz = CycloElem::from_int(p, 1) - CycloElem::zeta_power(p, 1);
    CHECK(embed_padic(omz, R).valuation() == Rat(1, 6));
    // multiplicativity and valuation compatibility with the exact side
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int it = 0; it < 15; ++it) {
        CycloElem a(p), b(p);
        for (size_t i = 0; i + 1 < p; ++i) {
            a[i] = d(rng);
            b[i] = d(rng);
        }
        CHECK(embed_padic(a * b, R) == embed_padic(a, R) * embed_padic(b, R));
        CHECK(embed_padic(a + b, R) == embed_padic(a, R) + embed_padic(b, R));
        if (!a.is_zero() && pi_valuation(a) < 30)
            CHECK(embed_padic(a, R).pi_valuation() == pi_valuation(a));
    }
}

TEST_CASE("gauss sums and the Stickelberger valuation") {
    PadicRing R7(7, 1, 42);
    CHECK(gauss_sum(R7, 0) == R7.one());
    for (i64 j = 1; j <= 5; ++j)
        CHECK(gauss_sum(R7, j).pi_valuation() == (i64)j);  // S_7(j) = j here
    PadicRing R5(5, 2, 40);
    CHECK(gauss_sum(R5, 0) == R5.one());
    CHECK(gauss_sum(R5, 8).pi_valuation() == 4);  // ord_5 g_2(8) = 1
    for (i64 j = 1; j <= 12; ++j)
        CHECK(gauss_sum(R5, j).pi_valuation() == (i64)digit_sum((u64)j, 5));
    PadicRing R11(11, 2, 60);
    CHECK(gauss_sum(R11, 40).pi_valuation() == 10);  // ord_11 g_2(40) = 1
}

TEST_CASE("hensel_sqrt") {
    PadicRing R(7, 1, 60);
    PadicElem a = R.from_int(2);  // 2 = 3²·... is 2 a QR mod 7? 3²=2 ✓
    PadicElem r = hensel_sqrt(a);
    CHECK(r * r == a);
    CHECK(R.residue(r) == R.ff().from_u64(3));  // smallest residue root 3 (vs 4)
    CHECK_THROWS_AS(hensel_sqrt(R.from_int(3)), HypothesisFailed);  // 3 is a non-QR mod 7
    CHECK_THROWS_AS(hensel_sqrt(R.from_int(7)), NotAUnit);
    PadicRing R2(5, 2, 40);
    for (i64 n : {2, 3, -1, 6}) {
        PadicElem x = hensel_sqrt(R2.from_int(n));  // everything is a square in F_25
        CHECK(x * x == R2.from_int(n));
    }
}

TEST_CASE("kappa: κ² = −4/27 and the Fermat-quotient dichotomy") {
    // p ≡ 1 mod 12 → κ ∈ Z_p; else degree-2 unramified
    CHECK(kappa_ring_degree(13) == 1);
    CHECK(kappa_ring_degree(5) == 2);
    CHECK(kappa_ring_degree(7) == 2);
    CHECK(kappa_ring_degree(11) == 2);
    for (u64 p : {5, 7, 13}) {
        PadicRing R(p, kappa_ring_degree(p), 10 * ((i64)p - 1));
        PadicElem k = kappa(R);
        CHECK((R.from_int(27) * k * k + R.from_int(4)).is_zero());
        PadicElem diff = k.pow_u64(p) - k;
        PadicElem sum = k.pow_u64(p) + k;
        if (p % 3 == 1) {  // κ̄ ∈ F_p ⟺ p ≡ 1 mod 3: κ^p ≡ κ mod p (Fermat)
            CHECK(diff.pi_val_floor() >= 1);
            CHECK(sum.pi_valuation() == 0);
        } else {  // Frobenius negates κ̄
            CHECK(sum.pi_val_floor() >= 1);
            CHECK(diff.pi_valuation() == 0);
        }
    }
}

TEST_CASE("exp/log inverse pair on the convergence domain") {
    PadicRing R(7, 1, 60);
    std::mt19937_64 rng(2026);
    for (int it = 0; it < 10; ++it) {
        PadicElem x = random_unit(rng, R).mul_pi(2 + (i64)(rng() % 3));
        PadicElem e = padic_exp(x);
        CHECK((e - R.one()).pi_val_floor() >= 2);
        CHECK(padic_log(e) == x);
        PadicElem u = R.one() + x;
        CHECK(padic_exp(padic_log(u)) == u);
    }
    CHECK(padic_exp(R.zero()) == R.one());
    CHECK_THROWS_AS(padic_exp(R.pi()), NonConvergent);
    // exp(x+y) = exp(x)exp(y)
    PadicElem x = R.pi().pow_u64(2).scaled_int(3), y = R.pi().pow_u64(3).scaled_int(5);
    CHECK(padic_exp(x + y) == padic_exp(x) * padic_exp(y));
}

TEST_CASE("prime-subring transport") {
    PadicRing R1(7, 1, 60), R2(7, 2, 60);
    CHECK(embed_prime_subring(R1.from_int(23), R2) == R2.from_int(23));
    CHECK(embed_prime_subring(R1.pi().scaled_int(5), R2) == R2.pi().scaled_int(5));
    // Teichmüller lifts of prime-field points transport to Teichmüller lifts
    for (u64 x = 1; x < 7; ++x) {
        PadicElem t1 = R1.teichmuller(R1.ff().from_u64(x));
        PadicElem t2 = R2.teichmuller(R2.ff().from_u64(x));
        CHECK(embed_prime_subring(t1, R2) == t2);
    }
}

TEST_CASE("storage budget guard") {
    CHECK_THROWS_AS(PadicRing(5, 1, 4 * 90), TooLarge);  // 5^90 out of budget
}
