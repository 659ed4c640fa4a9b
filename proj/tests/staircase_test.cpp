#include <catch2/catch_amalgamated.hpp>

#include "rep2d/brute.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/staircase.hpp"

using namespace rep2d;

TEST_CASE("nsv_tables") {
    {
        const std::vector<int> w{3, 7, 6, 7, 8, 6, 2};
        const auto t = nsv_tables(w);
        CHECK(t.up[4] == 3);
        CHECK(t.down[4] == 6);
        CHECK(t.up[1] == 0);
        CHECK(t.down[7] == 8);
    }
    {
        const auto t = nsv_tables(std::vector<int>{5});
        CHECK(t.up[1] == 0);
        CHECK(t.down[1] == 2);
    }
    {
        const auto t = nsv_tables(std::vector<int>{1, 2, 3});
        CHECK(t.up == std::vector<int>{0, 0, 1, 2});
        CHECK(t.down == std::vector<int>{4, 4, 4, 4});
    }
}

TEST_CASE("max_white_rectangles on the worked staircases") {
    const std::vector<Shape> expect{{7, 2}, {6, 3}, {5, 6}, {2, 7}, {1, 8}};
    const std::vector<int> w{3, 7, 6, 7, 8, 6, 2};
    CHECK(max_white_rectangles(w, MwrVariant::Nsv) == expect);
    CHECK(max_white_rectangles(w, MwrVariant::Stack) == expect);

    CHECK(max_white_rectangles(std::vector<int>{5}) == std::vector<Shape>{{1, 5}});
    CHECK(max_white_rectangles(std::vector<int>{2, 2, 2}) == std::vector<Shape>{{3, 2}});

    CHECK_THROWS_AS(max_white_rectangles(std::vector<int>{2, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(max_white_rectangles(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("both variants match the quadratic oracle on random staircases") {
    detail::SeededRng rng(808);
    for (int t = 0; t < 3000; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(12));
        std::vector<int> w(static_cast<size_t>(m));
        for (auto& x : w) x = 1 + static_cast<int>(rng.bounded(20));
        const auto expect = brute::max_white_rectangles(w);
        REQUIRE(max_white_rectangles(w, MwrVariant::Nsv) == expect);
        REQUIRE(max_white_rectangles(w, MwrVariant::Stack) == expect);
    }
}

TEST_CASE("output is an antichain of fitting shapes with nothing larger fitting") {
    detail::SeededRng rng(4141);
    auto fits = [](const std::vector<int>& w, const Shape& s) {
        for (size_t a = 0; a + s.h <= w.size(); ++a) {
            int mn = w[a];
            for (size_t b = a; b < a + static_cast<size_t>(s.h); ++b) mn = std::min(mn, w[b]);
            if (mn >= s.w) return true;
        }
        return false;
    };
    for (int t = 0; t < 500; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(10));
        std::vector<int> w(static_cast<size_t>(m));
        for (auto& x : w) x = 1 + static_cast<int>(rng.bounded(9));
        const auto shapes = max_white_rectangles(w);
        for (size_t a = 0; a < shapes.size(); ++a) {
            REQUIRE(fits(w, shapes[a]));
            REQUIRE_FALSE(fits(w, Shape{shapes[a].h + 1, shapes[a].w}));
            REQUIRE_FALSE(fits(w, Shape{shapes[a].h, shapes[a].w + 1}));
            for (size_t b = 0; b < shapes.size(); ++b)
                if (a != b) REQUIRE_FALSE(dominates(shapes[a], shapes[b]));
        }
    }
}

TEST_CASE("anchored shapes point at realizing rectangles") {
    detail::SeededRng rng(11111);
    for (int t = 0; t < 300; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(12));
        std::vector<int> w(static_cast<size_t>(m));
        for (auto& x : w) x = 1 + static_cast<int>(rng.bounded(12));
        for (const auto& as : max_white_rectangles_anchored(w)) {
            REQUIRE(as.top_row >= 1);
            REQUIRE(as.top_row + as.shape.h - 1 <= m);
            for (int r = as.top_row; r < as.top_row + as.shape.h; ++r)
                REQUIRE(w[static_cast<size_t>(r - 1)] >= as.shape.w);
        }
    }
}
