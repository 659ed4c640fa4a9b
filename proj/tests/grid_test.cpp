#include <catch2/catch_amalgamated.hpp>

#include "rep2d/grid.hpp"

using namespace rep2d;

TEST_CASE("parse_grid reads dimensions and contents") {
    const Grid g1 = parse_grid("1 1\na\n");
    CHECK(g1.rows == 1);
    CHECK(g1.cols == 1);
    CHECK(g1.at(1, 1) == 'a');

    const Grid g2 = parse_grid("2 3\nabc\nabd\n");
    CHECK(g2.rows == 2);
    CHECK(g2.cols == 3);
    CHECK(g2.at(2, 3) == 'd');
    CHECK(g2.at(1, 2) == 'b');

    // final newline is optional on input
    CHECK(parse_grid("1 2\nxy") == parse_grid("1 2\nxy\n"));
}

TEST_CASE("parse_grid errors name the offending line") {
    CHECK_THROWS_WITH(parse_grid(""), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_grid("2 2\nab\n"), Catch::Matchers::ContainsSubstring("line 3"));
    CHECK_THROWS_WITH(parse_grid("2 2\nabc\nab\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_grid("1 2\na b\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_grid("x 2\nab\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_grid("0 2\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_grid("1 1\na\nextra\n"),
                      Catch::Matchers::ContainsSubstring("trailing"));
}

TEST_CASE("serialize then parse is the identity") {
    detail::SeededRng rng(99);
    for (int t = 0; t < 200; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(9));
        const int n = 1 + static_cast<int>(rng.bounded(9));
        const int sigma = 1 + static_cast<int>(rng.bounded(94));
        const Grid g = make_random(m, n, sigma, rng.bounded(1ULL << 60));
        const std::string text = serialize(g);
        CHECK(parse_grid(text) == g);
        CHECK(text.back() == '\n');
        for (size_t pos = 0; pos + 1 < text.size(); ++pos)
            if (text[pos + 1] == '\n') CHECK(text[pos] != ' ');
    }
}

TEST_CASE("parse_grid rejects mangled inputs without crashing") {
    detail::SeededRng rng(616);
    const std::string base = serialize(make_random(5, 7, 3, 9));
    for (int t = 0; t < 500; ++t) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng.bounded(4));
        for (int e = 0; e < edits; ++e) {
            const size_t pos = rng.bounded(text.size());
            switch (rng.bounded(3)) {
                case 0: text[pos] = static_cast<char>(rng.bounded(256)); break;
                case 1: text.erase(pos, 1); break;
                default: text.insert(pos, 1, static_cast<char>('!' + rng.bounded(90))); break;
            }
        }
        try {
            const Grid g = parse_grid(text);
            // accepted inputs round-trip (the final LF is optional on input)
            CHECK((serialize(g) == text || serialize(g) == text + "\n"));
        } catch (const std::runtime_error&) {
            // rejected with a diagnostic: fine
        }
    }
}

TEST_CASE("unary generator") {
    const Grid g = generate("unary", GenParams{.m = 2, .n = 2});
    CHECK(g == parse_grid("2 2\naa\naa\n"));
}

TEST_CASE("fig3 generator matches the fixed staircase layout") {
    const Grid g = make_fig3();
    REQUIRE(g.rows == 8);
    REQUIRE(g.cols == 8);
    CHECK(serialize(g).substr(4, 8) == "bbbaaaaa");  // row 1
    std::string row8;
    for (int j = 1; j <= 8; ++j) row8 += static_cast<char>(g.at(8, j));
    CHECK(row8 == "aaaaabbb");
    int bcount = 0;
    for (auto c : g.cells) bcount += c == 'b';
    CHECK(bcount == 12);  // two staircases of widths 3+2+1
}

TEST_CASE("rowladder generator gives each row a distinct symbol") {
    const Grid g = make_rowladder(3, 2);
    CHECK(g.at(1, 1) == g.at(1, 2));
    CHECK(g.at(2, 1) == g.at(2, 2));
    CHECK(g.at(1, 1) != g.at(2, 1));
    CHECK(g.at(2, 1) != g.at(3, 1));
    CHECK(g.at(1, 1) != g.at(3, 1));
}

TEST_CASE("random generator is deterministic in the seed") {
    const Grid a = make_random(4, 4, 2, 7);
    const Grid b = make_random(4, 4, 2, 7);
    CHECK(a == b);
    const Grid c = make_random(4, 4, 2, 8);
    CHECK(a != c);
    for (auto cell : a.cells) CHECK((cell == 'a' || cell == 'b'));
}

TEST_CASE("generate rejects bad parameter combinations") {
    CHECK_THROWS_AS(generate("spiral", GenParams{.m = 2, .n = 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate("fig3", GenParams{.m = 8, .n = 8}), std::invalid_argument);
    CHECK_THROWS_AS(generate("random", GenParams{.m = 2, .n = 2, .sigma = 95}),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate("unary", GenParams{}), std::invalid_argument);
    CHECK_THROWS_AS(make_rowladder(95, 2), std::invalid_argument);
}
