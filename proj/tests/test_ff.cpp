#include <algorithm>
#include <set>

#include "doctest.h"
#include "expsum/ff.hpp"

using namespace expsum;

TEST_CASE("primality helper") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(5));
    CHECK(is_prime_u64(7));
    CHECK(is_prime_u64(11));
    CHECK(is_prime_u64(13));
    CHECK(is_prime_u64(23));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(9));
    CHECK_FALSE(is_prime_u64(49));
    CHECK_FALSE(is_prime_u64(91));
}

TEST_CASE("field construction and sizes") {
    FqCtx f71(7, 1);
    CHECK(f71.q() == 7);
    FqCtx f72(7, 2);
    CHECK(f72.q() == 49);
    FqCtx f53(5, 3);
    CHECK(f53.q() == 125);
    CHECK_THROWS_AS(FqCtx(6, 2), CompositeP);
    CHECK_THROWS_AS(FqCtx(7, 0), DegreeZero);
}

TEST_CASE("canonical modulus is the lexicographically smallest irreducible") {
    // over F_7 and F_11, Y^2 + 1 is irreducible (-1 is a nonresidue); over F_5
    // the smallest is Y^2 + 2 (Y^2+1 factors as (Y+2)(Y+3)).
    FqCtx f72(7, 2);
    CHECK(f72.modulus() == std::vector<u64>{1, 0});
    FqCtx f112(11, 2);
    CHECK(f112.modulus() == std::vector<u64>{1, 0});
    FqCtx f52(5, 2);
    CHECK(f52.modulus() == std::vector<u64>{2, 0});
}

TEST_CASE("trace examples") {
    FqCtx f72(7, 2);
    CHECK(f72.trace_to_prime(f72.one()) == 2);
    FqCtx f71(7, 1);
    for (u64 x = 0; x < 7; ++x) CHECK(f71.trace_to_prime(f71.from_u64(x)) == x);
    // trace is surjective F_7-linear on F_49: each fibre has 7 elements
    u64 zeros = 0;
    for (const auto& x : f72.enumerate())
        if (f72.trace_to_prime(x) == 0) ++zeros;
    CHECK(zeros == 7);
}

TEST_CASE("enumeration: determinism, cardinality, zero first, zero sum") {
    FqCtx f5(5, 1);
    auto e5 = f5.enumerate();
    CHECK(e5.size() == 5);
    CHECK(f5.is_zero(e5[0]));
    for (u64 s : {1, 2}) {
        FqCtx f(7, s);
        auto elems = f.enumerate();
        CHECK(elems.size() == f.q());
        CHECK(f.is_zero(elems[0]));
        std::set<std::vector<u64>> distinct(elems.begin(), elems.end());
        CHECK(distinct.size() == f.q());
        FqElem sum = f.zero();
        for (const auto& x : elems) sum = f.add(sum, x);
        CHECK(f.is_zero(sum));
    }
}

TEST_CASE("frobenius permutes and fixes exactly the prime field") {
    for (auto [p, s] : std::vector<std::pair<u64, u64>>{{5, 2}, {7, 2}, {5, 3}}) {
        FqCtx f(p, s);
        std::set<std::vector<u64>> image;
        u64 fixed = 0;
        for (const auto& x : f.enumerate()) {
            FqElem y = f.frobenius(x);
            image.insert(y);
            if (y == x) ++fixed;
            CHECK(f.trace_to_prime(y) == f.trace_to_prime(x));
        }
        CHECK(image.size() == f.q());
        CHECK(fixed == p);
    }
}

TEST_CASE("multiplicative group is cyclic: generator has full order") {
    for (auto [p, s] : std::vector<std::pair<u64, u64>>{{5, 1}, {7, 2}, {11, 1}, {5, 3}}) {
        FqCtx f(p, s);
        FqElem g = f.generator();
        u64 n = f.q() - 1;
        CHECK(f.pow(g, n) == f.one());
        for (u64 l : distinct_prime_factors(n)) CHECK_FALSE(f.pow(g, n / l) == f.one());
    }
}

TEST_CASE("index round-trip and field ops") {
    FqCtx f(5, 2);
    for (u64 i = 0; i < f.q(); ++i) {
        FqElem x = f.from_index(i);
        CHECK(f.to_index(x) == i);
        if (!f.is_zero(x)) {
            CHECK(f.mul(x, f.inv(x)) == f.one());
            CHECK(f.is_zero(f.add(x, f.neg(x))));
        }
    }
    // (Y)·(Y) = Y² = −2 = 3 under modulus Y²+2
    FqElem y{0, 1};
    CHECK(f.mul(y, y) == FqElem{3, 0});
}

TEST_CASE("enumeration cap") {
    FqCtx big(5, 13);  // 5^13 ≈ 1.2e9 > 2^24
    CHECK_THROWS_AS(big.enumerate(), TooLarge);
}
