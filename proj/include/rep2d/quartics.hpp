// Quartics and tandems: multi-family rectangle-union sweep, occurrences of
// primitively rooted quartics from 2D-runs, per-root occurrence graphs G_W,
// MaxPowers via Max White Rectangles, all distinct quartics, and all distinct
// tandems.
#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "rep2d/dbf.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/onedim.hpp"
#include "rep2d/runs2d.hpp"
#include "rep2d/staircase.hpp"

namespace rep2d {

struct Point {
    int i = 0;
    int j = 0;
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

// Family of rectangles over the grid-point lattice, keyed by a period pair.
struct RectFamily {
    int hper = 0;
    int vper = 0;
    std::vector<Rect> rects;
};

// Exact per-family union point sets, each sorted by (i,j). Left-to-right
// sweep: the broom holds row-boundary deltas (y, c) for half-open intervals
// [i1, i2+1); covered rows between consecutive boundaries with positive
// partial sum are reported. Empty-broom stretches jump to the next event, so
// the cost is O(n + rects + output) per the reporting argument.
inline std::vector<std::vector<Point>> union_report(std::span<const RectFamily> families, int m,
                                                    int n) {
    std::vector<std::vector<Point>> out(families.size());
    struct Ev {
        int x, y, c;
        auto operator<=>(const Ev&) const = default;
    };
    std::vector<Ev> evs;
    std::vector<std::pair<int, int>> broom, next;  // (y, c), sorted by y
    for (size_t f = 0; f < families.size(); ++f) {
        evs.clear();
        for (const auto& r : families[f].rects) {
            if (!r.within(m, n)) throw std::out_of_range("union_report: rect out of bounds");
            evs.push_back(Ev{r.j1, r.i1, +1});
            evs.push_back(Ev{r.j1, r.i2 + 1, -1});
            if (r.j2 + 1 <= n) {
                evs.push_back(Ev{r.j2 + 1, r.i1, -1});
                evs.push_back(Ev{r.j2 + 1, r.i2 + 1, +1});
            }
        }
        std::sort(evs.begin(), evs.end());
        broom.clear();
        size_t idx = 0;
        int x = evs.empty() ? n + 1 : evs[0].x;
        while (x <= n) {
            next.clear();
            size_t b = idx;
            while (b < evs.size() && evs[b].x == x) ++b;
            // merge broom with this column's batch, summing equal boundaries
            size_t bi = 0, ei = idx;
            auto push = [&](int y, int c) {
                if (!next.empty() && next.back().first == y)
                    next.back().second += c;
                else
                    next.emplace_back(y, c);
            };
            while (bi < broom.size() || ei < b) {
                if (ei >= b || (bi < broom.size() && broom[bi].first <= evs[ei].y))
                    push(broom[bi].first, broom[bi].second), ++bi;
                else
                    push(evs[ei].y, evs[ei].c), ++ei;
            }
            idx = b;
            // report covered rows, drop zeroed boundaries
            broom.clear();
            int s = 0;
            for (size_t t = 0; t < next.size(); ++t) {
                s += next[t].second;
                if (s > 0) {
                    const int till = next[t + 1].first;  // guaranteed: sums return to 0
                    for (int y = next[t].first; y < till; ++y) out[f].push_back(Point{y, x});
                }
                if (next[t].second != 0) broom.push_back(next[t]);
            }
            if (!broom.empty())
                ++x;
            else if (idx < evs.size())
                x = evs[idx].x;
            else
                break;
        }
        std::sort(out[f].begin(), out[f].end());
    }
    return out;
}

// Positioned occurrence of a primitively rooted quartic: the root is
// root_h x root_w and the quartic occupies [i..i+2*root_h-1] x [j..j+2*root_w-1].
struct QuarticOcc {
    int i = 0, j = 0;
    int root_h = 0, root_w = 0;
    bool operator==(const QuarticOcc&) const = default;
    auto operator<=>(const QuarticOcc&) const = default;
};

// All occurrences of primitively rooted quartics. Each run R with periods
// (p,q) contributes the rectangle of top-left corners of its induced 2q x 2p
// quartics; per-(p,q) families are deduplicated by the union sweep.
inline std::vector<QuarticOcc> prq_occurrences(const Grid& g, std::span<const Run2D> runs) {
    std::vector<Run2D> sorted(runs.begin(), runs.end());
    std::sort(sorted.begin(), sorted.end(), [](const Run2D& a, const Run2D& b) {
        return std::tie(a.vper, a.hper, a.rect) < std::tie(b.vper, b.hper, b.rect);
    });
    std::vector<RectFamily> fams;
    for (const auto& r : sorted) {
        if (fams.empty() || fams.back().hper != r.hper || fams.back().vper != r.vper)
            fams.push_back(RectFamily{r.hper, r.vper, {}});
        fams.back().rects.push_back(Rect{r.rect.i1, r.rect.i2 - 2 * r.vper + 1, r.rect.j1,
                                         r.rect.j2 - 2 * r.hper + 1});
    }
    auto points = union_report(fams, g.rows, g.cols);
    std::vector<QuarticOcc> occs;
    for (size_t f = 0; f < fams.size(); ++f)
        for (const auto& pt : points[f])
            occs.push_back(QuarticOcc{pt.i, pt.j, fams[f].vper, fams[f].hper});
    std::sort(occs.begin(), occs.end());
    return occs;
}

// Occurrence graph of one distinct primitively rooted quartic W^{2,2}:
// vertices are top-left corners, edges step +-root_h rows / +-root_w cols.
struct ComponentGrid {
    int root_h = 0, root_w = 0;
    RectId content;                // id of the quartic W^{2,2}
    std::vector<Point> vertices;   // sorted
    std::vector<int> label;        // component index per vertex
    int num_components = 0;
};

// Group occurrences by distinct quartic content and split each G_W into
// connected components with a reusable vertex board.
inline std::vector<ComponentGrid> build_components(const Grid& g, const Dbf2D& d,
                                                   std::span<const QuarticOcc> occs) {
    struct Keyed {
        RectId content;
        QuarticOcc occ;
        auto operator<=>(const Keyed&) const = default;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(occs.size());
    for (const auto& o : occs)
        keyed.push_back(Keyed{
            d.rect_id(Rect{o.i, o.i + 2 * o.root_h - 1, o.j, o.j + 2 * o.root_w - 1}), o});
    std::sort(keyed.begin(), keyed.end());

    std::vector<ComponentGrid> out;
    std::vector<int32_t> board(static_cast<size_t>(g.rows) * g.cols, -1);
    auto cell = [&](int i, int j) -> int32_t& {
        return board[static_cast<size_t>(i - 1) * g.cols + (j - 1)];
    };
    std::vector<int> bfs;
    for (size_t lo = 0; lo < keyed.size();) {
        size_t hi = lo;
        while (hi < keyed.size() && keyed[hi].content == keyed[lo].content) ++hi;
        ComponentGrid cg;
        cg.root_h = keyed[lo].occ.root_h;
        cg.root_w = keyed[lo].occ.root_w;
        cg.content = keyed[lo].content;
        for (size_t t = lo; t < hi; ++t) cg.vertices.push_back(Point{keyed[t].occ.i, keyed[t].occ.j});
        const int nv = static_cast<int>(cg.vertices.size());
        cg.label.assign(static_cast<size_t>(nv), -1);
        for (int v = 0; v < nv; ++v) cell(cg.vertices[static_cast<size_t>(v)].i, cg.vertices[static_cast<size_t>(v)].j) = v;
        int comp = 0;
        for (int v = 0; v < nv; ++v) {
            if (cg.label[static_cast<size_t>(v)] != -1) continue;
            bfs.clear();
            bfs.push_back(v);
            cg.label[static_cast<size_t>(v)] = comp;
            while (!bfs.empty()) {
                const int u = bfs.back();
                bfs.pop_back();
                const Point pu = cg.vertices[static_cast<size_t>(u)];
                const int di[4] = {-cg.root_h, cg.root_h, 0, 0};
                const int dj[4] = {0, 0, -cg.root_w, cg.root_w};
                for (int e = 0; e < 4; ++e) {
                    const int ni = pu.i + di[e], nj = pu.j + dj[e];
                    if (ni < 1 || ni > g.rows || nj < 1 || nj > g.cols) continue;
                    const int32_t w = cell(ni, nj);
                    if (w >= 0 && cg.label[static_cast<size_t>(w)] == -1) {
                        cg.label[static_cast<size_t>(w)] = comp;
                        bfs.push_back(w);
                    }
                }
            }
            ++comp;
        }
        cg.num_components = comp;
        for (const auto& v : cg.vertices) cell(v.i, v.j) = -1;  // zero the touched cells
        // vertices of one component agree on (i mod root_h, j mod root_w)
        {
            std::vector<Point> rep(static_cast<size_t>(comp), Point{-1, -1});
            for (int v = 0; v < nv; ++v) {
                auto& r = rep[static_cast<size_t>(cg.label[static_cast<size_t>(v)])];
                const Point pv = cg.vertices[static_cast<size_t>(v)];
                if (r.i < 0)
                    r = pv;
                else
                    assert((pv.i - r.i) % cg.root_h == 0 && (pv.j - r.j) % cg.root_w == 0);
            }
        }
        out.push_back(std::move(cg));
        lo = hi;
    }
    return out;
}

// Maximal exponent pair generated by a component, with a grid witness:
// W^{alpha,beta} occurs with its top-left W copy at witness.
struct PowerCandidate {
    int alpha = 0, beta = 0;
    Point witness;
};

namespace detail {

// Reusable lattice boards for the MaxPowers computation, shared across all
// roots and cleared after each component via the touched-cell list.
struct MaxPowersScratch {
    std::vector<char> mark;
    std::vector<int32_t> rlen;
    std::vector<Point> cells;  // lattice cells of the current component
    std::vector<int> whites;
    int lb = 0;  // board row stride

    void ensure(int rows, int cols) {
        lb = cols;
        const size_t need = static_cast<size_t>(rows) * cols;
        if (mark.size() < need) {
            mark.assign(need, 0);
            rlen.assign(need, 0);
        }
    }
    size_t at(int a, int b) const { return static_cast<size_t>(a) * lb + b; }
};

// Algorithm: insert the four root-sized cells per vertex into the lattice
// set S, compute rightward run lengths by scanning cells in non-increasing
// column order, then solve Max White Rectangles on every maximal vertical
// segment; keep the dominance-maximal shapes.
inline void max_powers_component(const ComponentGrid& cg, int comp, MaxPowersScratch& ws,
                                 std::vector<PowerCandidate>& out) {
    out.clear();
    const int rh = cg.root_h, rw = cg.root_w;
    // lattice coordinates: every vertex in a component is congruent mod
    // (root_h, root_w), so floor division gives a consistent grid
    int ri = 0, rj = 0, maxa = 0, maxb = 0;
    bool first = true;
    ws.cells.clear();
    for (size_t v = 0; v < cg.vertices.size(); ++v) {
        if (cg.label[v] != comp) continue;
        const Point p = cg.vertices[v];
        if (first) {
            ri = p.i % rh;
            rj = p.j % rw;
            first = false;
        }
        maxa = std::max(maxa, p.i / rh + 1);
        maxb = std::max(maxb, p.j / rw + 1);
    }
    if (first) return;  // empty component index
    ws.ensure(maxa + 2, maxb + 2);
    for (size_t v = 0; v < cg.vertices.size(); ++v) {
        if (cg.label[v] != comp) continue;
        const Point p = cg.vertices[v];
        const int a = p.i / rh, b = p.j / rw;
        for (int da = 0; da <= 1; ++da)
            for (int db = 0; db <= 1; ++db)
                if (!ws.mark[ws.at(a + da, b + db)]) {
                    ws.mark[ws.at(a + da, b + db)] = 1;
                    ws.cells.push_back(Point{a + da, b + db});
                }
    }
    std::sort(ws.cells.begin(), ws.cells.end(), [](const Point& x, const Point& y) {
        return std::tie(x.j, x.i) < std::tie(y.j, y.i);  // by column, then row
    });
    // rightward runs, columns processed right to left
    for (size_t t = ws.cells.size(); t-- > 0;) {
        const auto c = ws.cells[t];
        const int32_t right = ws.mark[ws.at(c.i, c.j + 1)] ? ws.rlen[ws.at(c.i, c.j + 1)] : 0;
        ws.rlen[ws.at(c.i, c.j)] = right + 1;
    }
    // maximal vertical segments per column -> staircases
    std::vector<PowerCandidate> cands;
    for (size_t lo = 0; lo < ws.cells.size();) {
        size_t hi = lo + 1;
        while (hi < ws.cells.size() && ws.cells[hi].j == ws.cells[lo].j &&
               ws.cells[hi].i == ws.cells[hi - 1].i + 1)
            ++hi;
        ws.whites.clear();
        for (size_t t = lo; t < hi; ++t)
            ws.whites.push_back(static_cast<int>(ws.rlen[ws.at(ws.cells[t].i, ws.cells[t].j)]));
        for (const auto& as : max_white_rectangles_anchored(ws.whites)) {
            const int a0 = ws.cells[lo].i + as.top_row - 1;  // lattice top row
            const int b0 = ws.cells[lo].j;
            // lattice cell (a,b) holds the W copy at grid row a*rh + ri
            cands.push_back(PowerCandidate{as.shape.h, as.shape.w,
                                           Point{a0 * rh + ri, b0 * rw + rj}});
        }
        lo = hi;
    }
    for (const auto& c : ws.cells) {
        ws.mark[ws.at(c.i, c.j)] = 0;
        ws.rlen[ws.at(c.i, c.j)] = 0;
    }
    // dominance filter within the component; alpha = 1 strips carry no
    // vertically repeated power and are dominated for every even exponent
    std::sort(cands.begin(), cands.end(), [](const PowerCandidate& a, const PowerCandidate& b) {
        return std::tie(b.alpha, b.beta) < std::tie(a.alpha, a.beta);  // alpha desc, beta desc
    });
    int best = 0;
    for (const auto& c : cands)
        if (c.alpha >= 2 && c.beta > best) {
            out.push_back(c);
            best = c.beta;
        }
    std::reverse(out.begin(), out.end());  // increasing alpha
}

}  // namespace detail

// Maximal (alpha, beta) with alpha > 1 such that W^{alpha,beta} is generated
// by the given component; sorted by increasing alpha.
inline std::vector<Shape> max_powers(const ComponentGrid& cg, int comp) {
    if (cg.vertices.empty()) throw std::invalid_argument("max_powers: empty component grid");
    detail::MaxPowersScratch ws;
    std::vector<PowerCandidate> cands;
    detail::max_powers_component(cg, comp, ws, cands);
    std::vector<Shape> out;
    for (const auto& c : cands) out.push_back(Shape{c.alpha, c.beta});
    return out;
}

enum class QuarticClass { PrimitivelyRooted, Thin, Thick };

// Content-distinct quartic W^{exp_r, exp_c} (even exponents, primitive W).
struct DistinctQuartic {
    int root_h = 0, root_w = 0;
    int exp_r = 0, exp_c = 0;
    RectId content;
    Point witness;
    QuarticClass cls = QuarticClass::PrimitivelyRooted;
};

// Classification is determined by the half-exponents: the quartic is
// V^{2,2} for V = W^{exp_r/2, exp_c/2}.
inline QuarticClass classify_quartic(int exp_r, int exp_c) {
    const int alpha = exp_r / 2, beta = exp_c / 2;
    if (alpha == 1 && beta == 1) return QuarticClass::PrimitivelyRooted;
    if (alpha == 1 || beta == 1) return QuarticClass::Thin;
    return QuarticClass::Thick;
}
inline QuarticClass classify_quartic(const DistinctQuartic& q) {
    return classify_quartic(q.exp_r, q.exp_c);
}

// All distinct quartics: component MaxPowers per root, global per-root
// maximal-power filtering through a shared best-width board, then every even
// exponent pair (2a, 2b) with alpha_{p-1} < 2a <= alpha_p, 2 <= 2b <= beta_p.
inline std::vector<DistinctQuartic> distinct_quartics_from_groups(
    const Grid& g, const Dbf2D& d, std::span<const ComponentGrid> groups) {
    std::vector<DistinctQuartic> out;
    detail::MaxPowersScratch ws;
    std::vector<PowerCandidate> comp_cands, all_cands, maximal;
    std::vector<int32_t> best_w(static_cast<size_t>(g.rows) + 2, 0);
    std::vector<Point> best_wit(static_cast<size_t>(g.rows) + 2);
    std::vector<int> touched;

    for (const auto& cg : groups) {
        all_cands.clear();
        for (int comp = 0; comp < cg.num_components; ++comp) {
            detail::max_powers_component(cg, comp, ws, comp_cands);
            all_cands.insert(all_cands.end(), comp_cands.begin(), comp_cands.end());
        }
        // global (per root) filter, shared board cleared between roots
        touched.clear();
        for (const auto& c : all_cands) {
            if (c.beta > best_w[static_cast<size_t>(c.alpha)]) {
                if (best_w[static_cast<size_t>(c.alpha)] == 0) touched.push_back(c.alpha);
                best_w[static_cast<size_t>(c.alpha)] = c.beta;
                best_wit[static_cast<size_t>(c.alpha)] = c.witness;
            }
        }
        std::sort(touched.begin(), touched.end());
        maximal.clear();
        int best = 0;
        for (size_t t = touched.size(); t-- > 0;) {
            const int a = touched[t];
            if (best_w[static_cast<size_t>(a)] > best) {
                maximal.push_back(PowerCandidate{a, best_w[static_cast<size_t>(a)],
                                                 best_wit[static_cast<size_t>(a)]});
                best = best_w[static_cast<size_t>(a)];
            }
        }
        std::reverse(maximal.begin(), maximal.end());  // increasing alpha
        for (int a : touched) best_w[static_cast<size_t>(a)] = 0;

        int prev_alpha = 0;
        for (const auto& mp : maximal) {
            for (int er = prev_alpha % 2 == 0 ? prev_alpha + 2 : prev_alpha + 1; er <= mp.alpha;
                 er += 2) {
                for (int ec = 2; ec <= mp.beta; ec += 2) {
                    DistinctQuartic q;
                    q.root_h = cg.root_h;
                    q.root_w = cg.root_w;
                    q.exp_r = er;
                    q.exp_c = ec;
                    q.witness = mp.witness;
                    q.content = d.rect_id(Rect{mp.witness.i, mp.witness.i + er * cg.root_h - 1,
                                               mp.witness.j, mp.witness.j + ec * cg.root_w - 1});
                    q.cls = classify_quartic(er, ec);
                    out.push_back(q);
                }
            }
            prev_alpha = mp.alpha;
        }
    }
    std::sort(out.begin(), out.end(), [](const DistinctQuartic& a, const DistinctQuartic& b) {
        return std::tie(a.root_h, a.root_w, a.exp_r, a.exp_c, a.content) <
               std::tie(b.root_h, b.root_w, b.exp_r, b.exp_c, b.content);
    });
    return out;
}

inline std::vector<DistinctQuartic> distinct_quartics(const Grid& g, const Dbf2D& d,
                                                      std::span<const Run2D> runs) {
    const auto occs = prq_occurrences(g, runs);
    const auto groups = build_components(g, d, occs);
    return distinct_quartics_from_groups(g, d, groups);
}

inline std::vector<DistinctQuartic> distinct_quartics(const Grid& g) {
    Dbf2D d(g);
    const auto runs = enumerate_runs2d(g, d);
    return distinct_quartics(g, d, runs);
}

// Content-distinct tandem W^{1,2}: height, total width, content id, witness.
struct Tandem {
    int h = 0, w = 0;
    RectId content;
    Point witness;
    bool operator==(const Tandem&) const = default;
};

// For each height h, rows of height-h column-segment identifiers are scanned
// for distinct 1D squares; candidates are deduplicated globally by content.
inline std::vector<Tandem> distinct_tandems(const Grid& g, const Dbf2D& d) {
    const int m = g.rows, n = g.cols;
    struct Cand {
        int h, w;
        RectId content;
        Point witness;
        auto operator<=>(const Cand&) const = default;
    };
    std::vector<Cand> cands;
    std::vector<int32_t> row(static_cast<size_t>(n));
    std::vector<StripId> strips(static_cast<size_t>(n));
    for (int h = 1; h <= m; ++h) {
        const int rcnt = m - h + 1;
        std::vector<StripId> vals;
        for (int i = 1; i <= rcnt; ++i) {
            for (int j = 1; j <= n; ++j) strips[static_cast<size_t>(j - 1)] = d.vstrip_id(i, i + h - 1, j);
            // densify the strip pairs to row-local integer symbols
            vals.assign(strips.begin(), strips.end());
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            for (int j = 0; j < n; ++j)
                row[static_cast<size_t>(j)] = static_cast<int32_t>(
                    std::lower_bound(vals.begin(), vals.end(), strips[static_cast<size_t>(j)]) -
                    vals.begin());
            for (const auto& sq : distinct_squares(row)) {
                const Rect rect{i, i + h - 1, sq.start, sq.start + sq.length - 1};
                cands.push_back(Cand{h, sq.length, d.rect_id(rect), Point{i, sq.start}});
            }
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<Tandem> out;
    for (size_t t = 0; t < cands.size(); ++t) {
        if (t > 0 && cands[t].h == cands[t - 1].h && cands[t].w == cands[t - 1].w &&
            cands[t].content == cands[t - 1].content)
            continue;
        out.push_back(Tandem{cands[t].h, cands[t].w, cands[t].content, cands[t].witness});
    }
    return out;
}

inline std::vector<Tandem> distinct_tandems(const Grid& g) {
    Dbf2D d(g);
    return distinct_tandems(g, d);
}

}  // namespace rep2d
