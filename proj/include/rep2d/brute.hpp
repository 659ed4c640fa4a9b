// Brute-force reference implementations, straight from the definitions and
// independent of the DBF/meta-string machinery. Intended for small inputs
// (grids up to ~12x12); the verify harness and the test suites diff the
// efficient algorithms against these.
#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rep2d/grid.hpp"
#include "rep2d/onedim.hpp"
#include "rep2d/quartics.hpp"
#include "rep2d/runs2d.hpp"
#include "rep2d/staircase.hpp"

namespace rep2d::brute {

inline int smallest_period(std::span<const int32_t> s) {
    const int n = static_cast<int>(s.size());
    for (int p = 1; p < n; ++p) {
        bool ok = true;
        for (int i = 0; i + p < n; ++i)
            if (s[static_cast<size_t>(i)] != s[static_cast<size_t>(i + p)]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return n;
}

// All maximal periodic fragments, via a per-start incremental failure table.
inline std::vector<Run1d> runs1d(std::span<const int32_t> s) {
    const int n = static_cast<int>(s.size());
    // per[a][b] = smallest period of s[a..b] (0-based, inclusive)
    std::vector<std::vector<int>> per(static_cast<size_t>(n));
    std::vector<int> fail;
    for (int a = 0; a < n; ++a) {
        auto sub = s.subspan(static_cast<size_t>(a));
        failure_table(sub, fail);
        per[static_cast<size_t>(a)].resize(static_cast<size_t>(n - a));
        for (int len = 1; len <= n - a; ++len)
            per[static_cast<size_t>(a)][static_cast<size_t>(len - 1)] = len - fail[static_cast<size_t>(len)];
    }
    auto p_of = [&](int a, int b) { return per[static_cast<size_t>(a)][static_cast<size_t>(b - a)]; };
    std::vector<Run1d> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int p = p_of(a, b);
            if (2 * p > b - a + 1) continue;
            if (a > 0 && p_of(a - 1, b) == p) continue;
            if (b + 1 < n && p_of(a, b + 1) == p) continue;
            out.push_back(Run1d{a + 1, b + 1, p});
        }
    return out;
}

inline std::vector<SquareDesc> distinct_squares(std::span<const int32_t> s) {
    const int n = static_cast<int>(s.size());
    std::map<std::vector<int32_t>, int> seen;  // content -> first start
    for (int len = 2; len <= n; len += 2)
        for (int st = 0; st + len <= n; ++st) {
            bool sq = true;
            for (int t = 0; t < len / 2; ++t)
                if (s[static_cast<size_t>(st + t)] != s[static_cast<size_t>(st + len / 2 + t)]) {
                    sq = false;
                    break;
                }
            if (!sq) continue;
            std::vector<int32_t> key(s.begin() + st, s.begin() + st + len);
            seen.try_emplace(std::move(key), st + 1);
        }
    std::vector<SquareDesc> out;
    for (const auto& [key, st] : seen) out.push_back(SquareDesc{static_cast<int>(key.size()), st});
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Smallest-period tables for every subarray of a small grid, cell-wise.
struct PeriodTables {
    int m, n;
    std::vector<int> hp, vp;  // indexed by (i1,i2,j1,j2), all 0-based

    size_t idx(int i1, int i2, int j1, int j2) const {
        return ((static_cast<size_t>(i1) * m + i2) * n + j1) * n + j2;
    }

    explicit PeriodTables(const Grid& g) : m(g.rows), n(g.cols) {
        hp.assign(static_cast<size_t>(m) * m * n * n, 0);
        vp.assign(hp.size(), 0);
        std::vector<int> fail(static_cast<size_t>(std::max(m, n)) + 1);
        // hper: for each row band (i1,i2) and start column j1, run a failure
        // function over columns compared cell-wise
        for (int i1 = 0; i1 < m; ++i1)
            for (int i2 = i1; i2 < m; ++i2) {
                auto col_eq = [&](int a, int b) {
                    for (int i = i1; i <= i2; ++i)
                        if (g.at(i + 1, a + 1) != g.at(i + 1, b + 1)) return false;
                    return true;
                };
                for (int j1 = 0; j1 < n; ++j1) {
                    fail[0] = fail[1] = 0;
                    hp[idx(i1, i2, j1, j1)] = 1;
                    int k = 0;
                    for (int t = 2; j1 + t <= n; ++t) {
                        while (k > 0 && !col_eq(j1 + k, j1 + t - 1)) k = fail[static_cast<size_t>(k)];
                        if (col_eq(j1 + k, j1 + t - 1)) ++k;
                        fail[static_cast<size_t>(t)] = k;
                        hp[idx(i1, i2, j1, j1 + t - 1)] = t - k;
                    }
                }
            }
        // vper symmetrically
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = j1; j2 < n; ++j2) {
                auto row_eq = [&](int a, int b) {
                    for (int j = j1; j <= j2; ++j)
                        if (g.at(a + 1, j + 1) != g.at(b + 1, j + 1)) return false;
                    return true;
                };
                for (int i1 = 0; i1 < m; ++i1) {
                    fail[0] = fail[1] = 0;
                    vp[idx(i1, i1, j1, j2)] = 1;
                    int k = 0;
                    for (int t = 2; i1 + t <= m; ++t) {
                        while (k > 0 && !row_eq(i1 + k, i1 + t - 1)) k = fail[static_cast<size_t>(k)];
                        if (row_eq(i1 + k, i1 + t - 1)) ++k;
                        fail[static_cast<size_t>(t)] = k;
                        vp[idx(i1, i1 + t - 1, j1, j2)] = t - k;
                    }
                }
            }
    }

    int hper(const Rect& r) const { return hp[idx(r.i1 - 1, r.i2 - 1, r.j1 - 1, r.j2 - 1)]; }
    int vper(const Rect& r) const { return vp[idx(r.i1 - 1, r.i2 - 1, r.j1 - 1, r.j2 - 1)]; }
};

}  // namespace detail

// Every subarray tested for double periodicity and the four extension checks,
// literally from the definition.
inline std::vector<Run2D> runs2d(const Grid& g) {
    detail::PeriodTables t(g);
    std::vector<Run2D> out;
    for (int i1 = 1; i1 <= g.rows; ++i1)
        for (int i2 = i1; i2 <= g.rows; ++i2)
            for (int j1 = 1; j1 <= g.cols; ++j1)
                for (int j2 = j1; j2 <= g.cols; ++j2) {
                    const Rect r{i1, i2, j1, j2};
                    const int p = t.hper(r), q = t.vper(r);
                    if (2 * p > r.width() || 2 * q > r.height()) continue;
                    auto same = [&](const Rect& e) { return t.hper(e) == p && t.vper(e) == q; };
                    if (i1 > 1 && same(Rect{i1 - 1, i2, j1, j2})) continue;
                    if (i2 < g.rows && same(Rect{i1, i2 + 1, j1, j2})) continue;
                    if (j1 > 1 && same(Rect{i1, i2, j1 - 1, j2})) continue;
                    if (j2 < g.cols && same(Rect{i1, i2, j1, j2 + 1})) continue;
                    out.push_back(Run2D{r, p, q});
                }
    return out;
}

// Primitive root by trying divisor periods cell-wise.
inline PrimitiveRoot primitive_root(const Grid& g, const Rect& r) {
    auto vperiod = [&](int d) {
        for (int i = r.i1; i + d <= r.i2; ++i)
            for (int j = r.j1; j <= r.j2; ++j)
                if (g.at(i, j) != g.at(i + d, j)) return false;
        return true;
    };
    auto hperiod = [&](int d) {
        for (int j = r.j1; j + d <= r.j2; ++j)
            for (int i = r.i1; i <= r.i2; ++i)
                if (g.at(i, j) != g.at(i, j + d)) return false;
        return true;
    };
    int rh = r.height(), rw = r.width();
    for (int d = 1; d <= r.height(); ++d)
        if (r.height() % d == 0 && vperiod(d)) {
            rh = d;
            break;
        }
    for (int d = 1; d <= r.width(); ++d)
        if (r.width() % d == 0 && hperiod(d)) {
            rw = d;
            break;
        }
    return PrimitiveRoot{rh, rw, r.height() / rh, r.width() / rw};
}

inline bool is_primitive(const Grid& g, const Rect& r) {
    const auto root = primitive_root(g, r);
    return root.alpha == 1 && root.beta == 1;
}

// All positioned primitively rooted quartics by scanning every (i, j, root).
inline std::vector<QuarticOcc> prq_occurrences(const Grid& g) {
    std::vector<QuarticOcc> out;
    for (int rh = 1; 2 * rh <= g.rows; ++rh)
        for (int rw = 1; 2 * rw <= g.cols; ++rw)
            for (int i = 1; i + 2 * rh - 1 <= g.rows; ++i)
                for (int j = 1; j + 2 * rw - 1 <= g.cols; ++j) {
                    bool quartic = true;
                    for (int a = 0; quartic && a < rh; ++a)
                        for (int b = 0; b < 2 * rw; ++b)
                            if (g.at(i + a, j + b) != g.at(i + a + rh, j + b)) {
                                quartic = false;
                                break;
                            }
                    for (int b = 0; quartic && b < rw; ++b)
                        for (int a = 0; a < 2 * rh; ++a)
                            if (g.at(i + a, j + b) != g.at(i + a, j + b + rw)) {
                                quartic = false;
                                break;
                            }
                    if (!quartic) continue;
                    if (!is_primitive(g, Rect{i, i + rh - 1, j, j + rw - 1})) continue;
                    out.push_back(QuarticOcc{i, j, rh, rw});
                }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string rect_cells(const Grid& g, const Rect& r) {
    std::string s;
    s.reserve(static_cast<size_t>(r.height()) * r.width());
    for (int i = r.i1; i <= r.i2; ++i)
        for (int j = r.j1; j <= r.j2; ++j) s.push_back(static_cast<char>(g.at(i, j)));
    return s;
}

// Content-deduplicated quartic, with root decomposition for classification.
struct QuarticKey {
    int h = 0, w = 0;
    std::string cells;
    int root_h = 0, root_w = 0, exp_r = 0, exp_c = 0;
    Point witness;
    auto operator<=>(const QuarticKey&) const = default;
};

inline std::vector<QuarticKey> distinct_quartics(const Grid& g) {
    std::map<std::pair<std::pair<int, int>, std::string>, QuarticKey> seen;
    for (int h = 2; h <= g.rows; h += 2)
        for (int w = 2; w <= g.cols; w += 2)
            for (int i = 1; i + h - 1 <= g.rows; ++i)
                for (int j = 1; j + w - 1 <= g.cols; ++j) {
                    bool quartic = true;
                    for (int a = 0; quartic && a < h / 2; ++a)
                        for (int b = 0; b < w; ++b)
                            if (g.at(i + a, j + b) != g.at(i + a + h / 2, j + b)) {
                                quartic = false;
                                break;
                            }
                    for (int b = 0; quartic && b < w / 2; ++b)
                        for (int a = 0; a < h; ++a)
                            if (g.at(i + a, j + b) != g.at(i + a, j + b + w / 2)) {
                                quartic = false;
                                break;
                            }
                    if (!quartic) continue;
                    const Rect r{i, i + h - 1, j, j + w - 1};
                    auto key = std::make_pair(std::make_pair(h, w), rect_cells(g, r));
                    if (seen.count(key)) continue;
                    const auto root = primitive_root(g, Rect{i, i + h / 2 - 1, j, j + w / 2 - 1});
                    QuarticKey qk;
                    qk.h = h;
                    qk.w = w;
                    qk.cells = key.second;
                    qk.root_h = root.root_h;
                    qk.root_w = root.root_w;
                    qk.exp_r = h / root.root_h;
                    qk.exp_c = w / root.root_w;
                    qk.witness = Point{i, j};
                    seen.emplace(std::move(key), std::move(qk));
                }
    std::vector<QuarticKey> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

struct TandemKey {
    int h = 0, w = 0;
    std::string cells;
    Point witness;
    auto operator<=>(const TandemKey&) const = default;
};

inline std::vector<TandemKey> distinct_tandems(const Grid& g) {
    std::map<std::pair<std::pair<int, int>, std::string>, Point> seen;
    for (int h = 1; h <= g.rows; ++h)
        for (int w = 2; w <= g.cols; w += 2)
            for (int i = 1; i + h - 1 <= g.rows; ++i)
                for (int j = 1; j + w - 1 <= g.cols; ++j) {
                    bool tandem = true;
                    for (int b = 0; tandem && b < w / 2; ++b)
                        for (int a = 0; a < h; ++a)
                            if (g.at(i + a, j + b) != g.at(i + a, j + b + w / 2)) {
                                tandem = false;
                                break;
                            }
                    if (!tandem) continue;
                    const Rect r{i, i + h - 1, j, j + w - 1};
                    seen.try_emplace(std::make_pair(std::make_pair(h, w), rect_cells(g, r)),
                                     Point{i, j});
                }
    std::vector<TandemKey> out;
    for (const auto& [k, wit] : seen)
        out.push_back(TandemKey{k.first.first, k.first.second, k.second, wit});
    std::sort(out.begin(), out.end());
    return out;
}

// O(m^2) Max White Rectangles: every (top,bottom) row interval realizes
// (height, min width); keep the dominance-maximal shapes.
inline std::vector<Shape> max_white_rectangles(std::span<const int> whites) {
    const int m = static_cast<int>(whites.size());
    std::vector<Shape> cands;
    for (int a = 0; a < m; ++a) {
        int mn = whites[static_cast<size_t>(a)];
        for (int b = a; b < m; ++b) {
            mn = std::min(mn, whites[static_cast<size_t>(b)]);
            cands.push_back(Shape{b - a + 1, mn});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Shape& x, const Shape& y) {
        return std::tie(y.h, y.w) < std::tie(x.h, x.w);  // h desc, w desc
    });
    std::vector<Shape> out;  // stays sorted by decreasing height, like the fast variants
    int best = 0;
    for (const auto& s : cands)
        if (s.w > best) {
            out.push_back(s);
            best = s.w;
        }
    return out;
}

// Rasterized union, one boolean board per family.
inline std::vector<std::vector<Point>> union_report(std::span<const RectFamily> families, int m,
                                                    int n) {
    std::vector<std::vector<Point>> out(families.size());
    std::vector<char> board(static_cast<size_t>(m) * n);
    for (size_t f = 0; f < families.size(); ++f) {
        std::fill(board.begin(), board.end(), 0);
        for (const auto& r : families[f].rects)
            for (int i = r.i1; i <= r.i2; ++i)
                for (int j = r.j1; j <= r.j2; ++j) board[static_cast<size_t>(i - 1) * n + (j - 1)] = 1;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                if (board[static_cast<size_t>(i - 1) * n + (j - 1)]) out[f].push_back(Point{i, j});
        std::sort(out[f].begin(), out[f].end());
    }
    return out;
}

}  // namespace rep2d::brute
