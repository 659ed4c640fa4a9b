// 2D text grids: representation, rectangle arithmetic, text I/O and the
// deterministic fixture generators.
#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rep2d {

using Symbol = unsigned char;

// Rectangular 2D string over a byte alphabet, 1-based (row, column) access.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<Symbol> cells;  // row-major

    Grid() = default;
    Grid(int m, int n, Symbol fill = 'a')
        : rows(m), cols(n), cells(static_cast<size_t>(m) * n, fill) {
        assert(m >= 1 && n >= 1);
    }

    Symbol at(int i, int j) const {
        assert(1 <= i && i <= rows && 1 <= j && j <= cols);
        return cells[static_cast<size_t>(i - 1) * cols + (j - 1)];
    }
    Symbol& at(int i, int j) {
        assert(1 <= i && i <= rows && 1 <= j && j <= cols);
        return cells[static_cast<size_t>(i - 1) * cols + (j - 1)];
    }

    bool operator==(const Grid&) const = default;
};

// Inclusive rectangle of rows [i1,i2] and columns [j1,j2].
struct Rect {
    int i1 = 1, i2 = 1, j1 = 1, j2 = 1;

    int height() const { return i2 - i1 + 1; }
    int width() const { return j2 - j1 + 1; }
    bool within(int m, int n) const {
        return 1 <= i1 && i1 <= i2 && i2 <= m && 1 <= j1 && j1 <= j2 && j2 <= n;
    }
    bool contains(const Rect& o) const {
        return i1 <= o.i1 && o.i2 <= i2 && j1 <= o.j1 && o.j2 <= j2;
    }

    bool operator==(const Rect&) const = default;
    auto operator<=>(const Rect&) const = default;  // (i1,i2,j1,j2) order
};

// A (height, width) rectangle shape under the componentwise dominance order.
struct Shape {
    int h = 0;
    int w = 0;
    bool operator==(const Shape&) const = default;
    auto operator<=>(const Shape&) const = default;
};

inline bool dominates(const Shape& a, const Shape& b) {
    return a.h >= b.h && a.w >= b.w;
}

// --- text format -----------------------------------------------------------
//
// Line 1: "<rows> <cols>" with a single space; then one line per row, LF line
// endings, no trailing whitespace. Symbols are visible ASCII (33..126).

inline bool printable_symbol(Symbol c) { return c >= 33 && c <= 126; }

inline Grid parse_grid(std::string_view text) {
    auto fail = [](int line, const std::string& what) {
        throw std::runtime_error("grid parse error (line " + std::to_string(line) + "): " + what);
    };
    if (text.empty()) fail(1, "empty input");

    size_t pos = 0;
    int lineno = 0;
    auto next_line = [&](bool* had_newline) -> std::optional<std::string_view> {
        if (pos >= text.size()) return std::nullopt;
        ++lineno;
        size_t nl = text.find('\n', pos);
        std::string_view line;
        if (nl == std::string_view::npos) {
            line = text.substr(pos);
            pos = text.size();
            if (had_newline) *had_newline = false;
        } else {
            line = text.substr(pos, nl - pos);
            pos = nl + 1;
            if (had_newline) *had_newline = true;
        }
        return line;
    };

    auto header = next_line(nullptr);
    if (!header) fail(1, "empty input");
    // "<m> <n>", both positive decimal integers, exactly one space.
    int m = 0, n = 0;
    {
        std::string_view h = *header;
        size_t sp = h.find(' ');
        if (sp == std::string_view::npos || sp == 0 || sp + 1 >= h.size())
            fail(1, "expected \"<rows> <cols>\"");
        auto parse_int = [&](std::string_view s, int* out) {
            if (s.empty() || s.size() > 9) return false;
            long v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') return false;
                v = v * 10 + (c - '0');
            }
            *out = static_cast<int>(v);
            return true;
        };
        if (!parse_int(h.substr(0, sp), &m) || !parse_int(h.substr(sp + 1), &n))
            fail(1, "expected \"<rows> <cols>\"");
        if (m < 1 || n < 1) fail(1, "dimensions must be positive");
    }

    Grid g(m, n);
    for (int i = 1; i <= m; ++i) {
        auto row = next_line(nullptr);
        if (!row) fail(lineno + 1, "missing row " + std::to_string(i) + " of " + std::to_string(m));
        if (static_cast<int>(row->size()) != n)
            fail(lineno, "row has " + std::to_string(row->size()) + " symbols, expected " + std::to_string(n));
        for (int j = 1; j <= n; ++j) {
            Symbol c = static_cast<Symbol>((*row)[j - 1]);
            if (!printable_symbol(c)) fail(lineno, "non-printable symbol");
            g.at(i, j) = c;
        }
    }
    if (pos < text.size()) fail(lineno + 1, "trailing content after last row");
    return g;
}

inline std::string serialize(const Grid& g) {
    std::string out;
    out.reserve(static_cast<size_t>(g.rows) * (g.cols + 1) + 16);
    out += std::to_string(g.rows);
    out += ' ';
    out += std::to_string(g.cols);
    out += '\n';
    for (int i = 1; i <= g.rows; ++i) {
        for (int j = 1; j <= g.cols; ++j) out += static_cast<char>(g.at(i, j));
        out += '\n';
    }
    return out;
}

// --- generators -------------------------------------------------------------

// Fixed symbol ramp: letters, digits, then the remaining visible ASCII.
inline constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyz"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "0123456789"
    "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
static_assert(kAlphabet.size() == 94);

inline Symbol nth_symbol(int idx) {
    assert(0 <= idx && idx < static_cast<int>(kAlphabet.size()));
    return static_cast<Symbol>(kAlphabet[static_cast<size_t>(idx)]);
}

inline Grid make_unary(int m, int n, Symbol fill = 'a') { return Grid(m, n, fill); }

// The 8x8 array with two 'b' staircases (widths 3,2,1 top-left and 1,2,3
// bottom-right) on an 'a' background.
inline Grid make_fig3() {
    const char* rows[8] = {
        "bbbaaaaa",
        "bbaaaaaa",
        "baaaaaaa",
        "aaaaaaaa",
        "aaaaaaaa",
        "aaaaaaab",
        "aaaaaabb",
        "aaaaabbb",
    };
    Grid g(8, 8);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) g.at(i, j) = static_cast<Symbol>(rows[i - 1][j - 1]);
    return g;
}

// Row i constant, each row a distinct symbol.
inline Grid make_rowladder(int m, int n) {
    if (m > static_cast<int>(kAlphabet.size()))
        throw std::invalid_argument("rowladder: more rows than alphabet symbols");
    Grid g(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) g.at(i, j) = nth_symbol(i - 1);
    return g;
}

namespace detail {
// mt19937_64 output is pinned by the standard; the rejection sampler keeps the
// bounded draw implementation-independent too.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) { next(); }
    std::uint64_t bounded(std::uint64_t k) {
        assert(k >= 1);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % k;
    }

  private:
    // splitmix64: small, stable across platforms.
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t state_;
};
}  // namespace detail

inline Grid make_random(int m, int n, int sigma, std::uint64_t seed) {
    if (sigma < 1 || sigma > static_cast<int>(kAlphabet.size()))
        throw std::invalid_argument("random: alphabet size out of range [1,94]");
    Grid g(m, n);
    detail::SeededRng rng(seed);
    for (auto& c : g.cells) c = nth_symbol(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(sigma))));
    return g;
}

struct GenParams {
    std::optional<int> m, n, sigma;
    std::optional<std::uint64_t> seed;
};

inline Grid generate(std::string_view kind, const GenParams& p) {
    auto need_dims = [&]() {
        if (!p.m || !p.n || *p.m < 1 || *p.n < 1)
            throw std::invalid_argument(std::string(kind) + ": positive m and n required");
    };
    if (kind == "unary") {
        need_dims();
        return make_unary(*p.m, *p.n);
    }
    if (kind == "fig3") {
        if (p.m || p.n || p.sigma)
            throw std::invalid_argument("fig3: takes no dimension parameters (fixed 8x8)");
        return make_fig3();
    }
    if (kind == "rowladder") {
        need_dims();
        return make_rowladder(*p.m, *p.n);
    }
    if (kind == "random") {
        need_dims();
        return make_random(*p.m, *p.n, p.sigma.value_or(2), p.seed.value_or(0));
    }
    throw std::invalid_argument("unknown generator kind: " + std::string(kind));
}

}  // namespace rep2d
