#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "expsum/newton.hpp"

using namespace expsum;

namespace {
std::vector<std::optional<Rat>> vals(std::vector<Rat> v) {
    return {v.begin(), v.end()};
}
}  // namespace

TEST_CASE("lower hull of a short valuation list") {
    NPolygon P = newton_polygon(vals({Rat(0), Rat(1), Rat(3)}));
    REQUIRE(P.vertices.size() == 3);
    CHECK(P.vertices[0] == std::pair<i64, Rat>{0, Rat(0)});
    CHECK(P.vertices[1] == std::pair<i64, Rat>{1, Rat(1)});
    CHECK(P.vertices[2] == std::pair<i64, Rat>{2, Rat(3)});
    CHECK(P.slope_list() == std::vector<Rat>{Rat(1), Rat(2)});

    // middle point above the chord: single segment of slope 2
    NPolygon Q = newton_polygon(vals({Rat(0), Rat(3), Rat(4)}));
    REQUIRE(Q.vertices.size() == 2);
    CHECK(Q.slopes == std::vector<std::pair<Rat, i64>>{{Rat(2), 2}});

    NPolygon F = newton_polygon(vals({Rat(0), Rat(5, 3), Rat(4)}));
    CHECK(F.slope_list() == std::vector<Rat>{Rat(5, 3), Rat(7, 3)});
}

TEST_CASE("infinite (absent) coefficients are skipped") {
    std::vector<std::optional<Rat>> v{Rat(0), std::nullopt, Rat(1)};
    NPolygon P = newton_polygon(v);
    CHECK(P.slopes == std::vector<std::pair<Rat, i64>>{{Rat(1, 2), 2}});
    CHECK_THROWS_AS(newton_polygon({}), EmptyInput);
    CHECK_THROWS_AS(newton_polygon({std::nullopt, Rat(0)}), EmptyInput);
}

TEST_CASE("hull properties on random data") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 2 + rng() % 9;
        std::vector<std::optional<Rat>> v(n);
        v[0] = Rat(0);
        for (size_t i = 1; i < n; ++i)
            if (rng() % 5 != 0) v[i] = Rat((i64)(rng() % 40) - 8, 1 + (i64)(rng() % 4));
        if (!v.back()) v.back() = Rat((i64)(rng() % 20));
        NPolygon P = newton_polygon(v);

        // slopes nondecreasing, multiplicities total the degree span
        i64 tot = 0;
        for (size_t i = 0; i < P.slopes.size(); ++i) {
            if (i) CHECK(!(P.slopes[i].first < P.slopes[i - 1].first));
            tot += P.slopes[i].second;
        }
        CHECK(tot == P.vertices.back().first);

        // every finite point lies on or above the hull
        for (size_t i = 0; i < n; ++i) {
            if (!v[i]) continue;
            for (size_t k = 0; k + 1 < P.vertices.size(); ++k) {
                auto [x0, y0] = P.vertices[k];
                auto [x1, y1] = P.vertices[k + 1];
                if ((i64)i < x0 || (i64)i > x1) continue;
                // (v_i - y0)·(x1 - x0) >= (y1 - y0)·(i - x0)
                CHECK(!((*v[i] - y0) * Rat(x1 - x0) < (y1 - y0) * Rat((i64)i - x0)));
            }
        }

        // idempotence: the hull of the vertex valuations is the hull itself
        std::vector<std::optional<Rat>> w((size_t)P.vertices.back().first + 1);
        for (auto& [x, y] : P.vertices) w[(size_t)x] = y;
        NPolygon P2 = newton_polygon(w);
        CHECK(P2.slopes == P.slopes);
    }
}

TEST_CASE("predicted fibre slopes at accepted (d, p)") {
    CHECK(predicted_fibre_slopes(3, 7) == std::vector<Rat>{Rat(1, 3), Rat(2, 3)});
    CHECK(predicted_fibre_slopes(3, 11) == std::vector<Rat>{Rat(2, 5), Rat(3, 5)});
    CHECK(predicted_fibre_slopes(3, 5) == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    CHECK(predicted_fibre_slopes(5, 11) ==
          std::vector<Rat>{Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)});
    CHECK(predicted_fibre_slopes(5, 13) ==
          std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(2, 3), Rat(2, 3)});

    // each slope list is symmetric: s_j + s_{d-j} = 1
    for (auto [d, p] : {std::pair<u64, u64>{3, 13}, {4, 11}, {5, 11}, {6, 13}}) {
        std::vector<Rat> s = predicted_fibre_slopes(d, p);
        REQUIRE(s.size() == d - 1);
        for (size_t j = 0; j < s.size(); ++j) CHECK(s[j] + s[s.size() - 1 - j] == Rat(1));
    }

    CHECK_THROWS_AS(predicted_fibre_slopes(3, 3), HypothesisFailed);  // p | d
    CHECK_THROWS_AS(predicted_fibre_slopes(4, 7), HypothesisFailed);  // p < d+6
    CHECK_THROWS_AS(predicted_fibre_slopes(5, 7), HypothesisFailed);
}

TEST_CASE("coefficient lower bound report") {
    // synthetic ord vector for k=3, p=7, degree 2: bound c·(m²+m+3m) with
    // c = 36/147; m=1: 36·5/147, m=2: 36·12/147
    std::vector<std::optional<Rat>> ord{Rat(0), Rat(5, 3), Rat(4)};
    BoundReport r = check_lower_bound(ord, 3, 7);
    CHECK(r.pass);
    REQUIRE(r.bound.size() == 3);
    CHECK(r.bound[1] == Rat(180, 147));
    CHECK(r.bound[2] == Rat(432, 147));
    CHECK(r.margin[1] == Rat(5, 3) - Rat(180, 147));
    CHECK(r.conj_margin[1] == Rat(5, 3) - Rat(5, 3));

    // a violating coefficient flips pass
    std::vector<std::optional<Rat>> bad{Rat(0), Rat(1, 2), Rat(4)};
    CHECK_FALSE(check_lower_bound(bad, 3, 7).pass);

    // absent coefficients (certified zero) never violate
    std::vector<std::optional<Rat>> sparse{Rat(0), std::nullopt, Rat(4)};
    CHECK(check_lower_bound(sparse, 3, 7).pass);

    CHECK_THROWS_AS(check_lower_bound(ord, 4, 7), OddK);
    CHECK_THROWS_AS(check_lower_bound(ord, 9, 7), KTooLarge);
}
