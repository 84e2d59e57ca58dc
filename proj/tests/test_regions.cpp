#include <algorithm>
#include <set>

#include "doctest.h"
#include "zic/regions.hpp"
#include "zic/schemes.hpp"
#include "zic/verifier.hpp"

using namespace zic;
using namespace zic::regions;
using det::DetConfig;
using det::make_config;

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> int_vertices(const DetConfig& cfg) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& v : vertices(capacity_region(cfg))) {
        REQUIRE(v.first.is_integer());
        REQUIRE(v.second.is_integer());
        out.insert({v.first.num(), v.second.num()});
    }
    return out;
}

}  // namespace

TEST_CASE("capacity region vertices, weak regime") {
    auto verts = vertices(capacity_region(make_config(5, 3, 1)));
    std::vector<RatePoint> expect = {{0, 0}, {5, 0}, {5, 3}, {3, 5}, {0, 5}};
    CHECK(verts == expect);

    // C = 0: intersections of R1+R2 <= 7 with the 5x5 box.
    auto verts0 = vertices(capacity_region(make_config(5, 3, 0)));
    std::vector<RatePoint> expect0 = {{0, 0}, {5, 0}, {5, 2}, {2, 5}, {0, 5}};
    CHECK(verts0 == expect0);

    // C >= 3 saturates to the square.
    auto verts3 = vertices(capacity_region(make_config(5, 3, 3)));
    std::vector<RatePoint> square = {{0, 0}, {5, 0}, {5, 5}, {0, 5}};
    CHECK(verts3 == square);
    CHECK(vertices(capacity_region(make_config(5, 3, 8))) == square);
}

TEST_CASE("capacity region vertices, high regime") {
    auto verts = vertices(capacity_region(make_config(4, 5, 1)));
    std::vector<RatePoint> expect = {{0, 0}, {4, 0}, {4, 1}, {2, 3}, {0, 3}};
    CHECK(verts == expect);

    // C = 0: R1+R2 <= 4 cuts the rectangle; (4,0) sits on the sum line.
    auto verts0 = vertices(capacity_region(make_config(4, 5, 0)));
    std::vector<RatePoint> expect0 = {{0, 0}, {4, 0}, {1, 3}, {0, 3}};
    CHECK(verts0 == expect0);
}

TEST_CASE("very high regime degenerates to a segment") {
    auto verts = vertices(capacity_region(make_config(3, 7, 5)));
    std::vector<RatePoint> expect = {{0, 0}, {3, 0}};
    CHECK(verts == expect);
}

TEST_CASE("square region has four nontrivial vertices") {
    RateRegion square;
    square.constraints = {{1, 0, 4}, {0, 1, 4}};
    auto verts = vertices(square);
    CHECK(verts.size() == 4);
}

TEST_CASE("unbounded and invalid regions are rejected") {
    RateRegion open;
    open.constraints = {{1, 0, 4}};  // R2 unbounded
    CHECK_THROWS_AS(vertices(open), std::invalid_argument);

    RateRegion diag;  // blocked on both axes but open along the diagonal
    diag.constraints = {{1, -1, 0}, {-1, 1, 0}};
    CHECK_THROWS_AS(vertices(diag), std::invalid_argument);

    CHECK_THROWS_AS(capacity_region(make_config(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("contains") {
    auto region = capacity_region(make_config(5, 3, 1));
    CHECK(contains(region, {5, 3}));
    CHECK_FALSE(contains(region, {5, 4}));  // violates the sum constraint
    CHECK(contains(region, {0, 0}));
    CHECK(contains(region, {Rational(9, 2), Rational(7, 2)}));
    CHECK_FALSE(contains(region, {Rational(-1, 2), 0}));
}

TEST_CASE("sum capacity closed forms") {
    CHECK(sum_capacity(make_config(5, 3, 1)) == Rational(8));
    CHECK(sum_capacity(make_config(4, 5, 1)) == Rational(5));
    CHECK(sum_capacity(make_config(3, 6, 9)) == Rational(3));
    CHECK(sum_capacity(make_config(4, 8, 0)) == Rational(4));
    CHECK_THROWS(sum_capacity(make_config(0, 1, 0)));

    // Cross-check against the max over region vertices.
    for (int m = 1; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            for (int C = 0; C <= 6; ++C) {
                DetConfig cfg = make_config(m, n, C);
                Rational best(0);
                for (const auto& v : vertices(capacity_region(cfg)))
                    best = std::max(best, v.first + v.second);
                CHECK(sum_capacity(cfg) == best);
            }
}

TEST_CASE("monotone in C and saturation thresholds") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            for (int C = 0; C <= 5; ++C) {
                auto bigger = capacity_region(make_config(m, n, C + 1));
                for (const auto& v : vertices(capacity_region(make_config(m, n, C))))
                    CHECK(contains(bigger, v));
            }

    for (int m = 2; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            for (int C = 0; C <= 7; ++C) {
                DetConfig cfg = make_config(m, n, C);
                if (regime(cfg) == det::Regime::WeakModerate) {
                    bool is_square = int_vertices(cfg) ==
                                     std::set<std::pair<std::int64_t, std::int64_t>>{
                                         {0, 0}, {m, 0}, {m, m}, {0, m}};
                    CHECK(is_square == (C >= n));
                } else if (regime(cfg) == det::Regime::High) {
                    std::int64_t r2 = 2 * m - n;
                    bool is_rect = int_vertices(cfg) ==
                                   std::set<std::pair<std::int64_t, std::int64_t>>{
                                       {0, 0}, {m, 0}, {m, r2}, {0, r2}};
                    CHECK(is_rect == (C >= 2 * m - n));
                }
            }
}

TEST_CASE("achievability closure: corner rates equal positive vertices, q <= 5") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (int C = 0; C <= 5; ++C) {
                DetConfig cfg = make_config(m, n, C);
                std::set<std::pair<std::int64_t, std::int64_t>> rates;
                for (auto corner : schemes::corners_for(regime(cfg))) {
                    auto s = schemes::corner_scheme(cfg, corner);
                    rates.insert({s.k1, s.k2});
                    CHECK(contains(capacity_region(cfg),
                                   {Rational(s.k1), Rational(s.k2)}));
                }
                auto verts = int_vertices(cfg);
                verts.erase({0, 0});
                CHECK(rates == verts);
            }
}

TEST_CASE("sum capacity curve") {
    using zic::Rational;
    // alpha = 0, C = 0: both users get m.
    auto pts = sum_capacity_curve(8, 0, {Rational(0), Rational(1, 2), Rational(1),
                                         Rational(3, 2), Rational(2), Rational(3)});
    CHECK(pts[0].normalized_sum == Rational(2));
    CHECK(pts[1].normalized_sum == Rational(3, 2));  // min(2, 2-1/2)
    CHECK(pts[2].normalized_sum == Rational(1));
    CHECK(pts[3].normalized_sum == Rational(1));  // high regime, C = 0
    CHECK(pts[4].normalized_sum == Rational(1));
    CHECK(pts[5].normalized_sum == Rational(1));

    // C = m keeps the normalized sum at 2 through the weak regime.
    auto full = sum_capacity_curve(8, 8, {Rational(0), Rational(1, 2), Rational(1)});
    for (const auto& p : full) CHECK(p.normalized_sum == Rational(2));

    CHECK_THROWS_AS(sum_capacity_curve(8, 0, {Rational(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(sum_capacity_curve(0, 0, {Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(sum_capacity_curve(8, 0, {Rational(-1, 2)}), std::invalid_argument);
}
