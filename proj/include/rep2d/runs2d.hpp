// 2D periodicity: horizontal/vertical periods, primitive roots, meta-strings
// H^k_i, and enumeration of all 2D-runs by anchoring every run at the start
// column of a horizontal meta-run of power-of-two height.
#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rep2d/dbf.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/onedim.hpp"

namespace rep2d {

// Maximal doubly periodic rectangle with its smallest periods.
struct Run2D {
    Rect rect;
    int hper = 0;
    int vper = 0;
    bool operator==(const Run2D&) const = default;
    auto operator<=>(const Run2D&) const = default;
};

// Row of column identifiers for the height-2^k window based at row i.
struct MetaString {
    int base_row = 0;
    int level = 0;
    std::vector<int32_t> symbols;
};

struct PrimitiveRoot {
    int root_h = 0;
    int root_w = 0;
    int alpha = 0;  // vertical exponent:   root_h * alpha = height
    int beta = 0;   // horizontal exponent: root_w * beta  = width
    bool operator==(const PrimitiveRoot&) const = default;
};

namespace detail {

// smallest period of a strip-id sequence, reusing a failure buffer
inline int strip_period(std::span<const StripId> syms, std::vector<int>& fail) {
    failure_table(syms, fail);
    return static_cast<int>(syms.size()) - fail.back();
}

inline void col_syms(const Dbf2D& d, const Rect& r, std::vector<StripId>& out) {
    out.clear();
    out.reserve(static_cast<size_t>(r.width()));
    for (int j = r.j1; j <= r.j2; ++j) out.push_back(d.vstrip_id(r.i1, r.i2, j));
}

inline void row_syms(const Dbf2D& d, const Rect& r, std::vector<StripId>& out) {
    out.clear();
    out.reserve(static_cast<size_t>(r.height()));
    for (int i = r.i1; i <= r.i2; ++i) out.push_back(d.hstrip_id(i, r.j1, r.j2));
}

}  // namespace detail

// Smallest horizontal period of A[r]: smallest period of its column sequence.
inline int hper(const Grid& g, const Dbf2D& d, const Rect& r) {
    if (!r.within(g.rows, g.cols)) throw std::out_of_range("hper: rect out of bounds");
    std::vector<StripId> syms;
    std::vector<int> fail;
    detail::col_syms(d, r, syms);
    return detail::strip_period(syms, fail);
}

inline int vper(const Grid& g, const Dbf2D& d, const Rect& r) {
    if (!r.within(g.rows, g.cols)) throw std::out_of_range("vper: rect out of bounds");
    std::vector<StripId> syms;
    std::vector<int> fail;
    detail::row_syms(d, r, syms);
    return detail::strip_period(syms, fail);
}

// Unique primitive array tiling A[r]: root dimensions are the smallest
// divisor periods of the height and width.
inline PrimitiveRoot primitive_root(const Grid& g, const Dbf2D& d, const Rect& r) {
    if (!r.within(g.rows, g.cols)) throw std::out_of_range("primitive_root: rect out of bounds");
    std::vector<StripId> syms;
    std::vector<int> fail;
    auto smallest_divisor_period = [&](int len) {
        failure_table(std::span<const StripId>(syms), fail);
        // periods of the whole sequence, from the border chain
        std::vector<int> periods;
        for (int b = fail[static_cast<size_t>(len)];; b = fail[static_cast<size_t>(b)]) {
            periods.push_back(len - b);
            if (b == 0) break;
        }
        std::sort(periods.begin(), periods.end());
        for (int p : periods)
            if (len % p == 0) return p;
        return len;  // unreachable: len is always a period
    };
    detail::row_syms(d, r, syms);
    const int rh = smallest_divisor_period(r.height());
    detail::col_syms(d, r, syms);
    const int rw = smallest_divisor_period(r.width());
    return PrimitiveRoot{rh, rw, r.height() / rh, r.width() / rw};
}

inline MetaString meta_string(const Grid& g, const Dbf2D& d, int i, int k) {
    if (k < 0 || (1 << k) > g.rows) throw std::out_of_range("meta_string: level too large");
    if (i < 1 || i + (1 << k) - 1 > g.rows) throw std::out_of_range("meta_string: row out of range");
    auto row = d.meta_row(k, i);
    return MetaString{i, k, std::vector<int32_t>(row.begin(), row.end())};
}

namespace detail {

// Candidate smallest vertical periods for runs anchored at the top of a
// row-symbol window, per the two cases of the height-class argument:
// the height-2^k slice's period when the slice is vertically periodic, plus
// every prefix period p > 2^{k-1} with p <= prefix/2 (at most two exist).
inline void vper_candidates_from_syms(std::span<const StripId> syms, int k,
                                      std::vector<int>& fail, std::vector<int>& out) {
    out.clear();
    const int hb = static_cast<int>(syms.size());
    const int lo = 1 << k;
    if (hb < lo) return;
    failure_table(syms, fail);
    const int thr = k >= 1 ? (1 << (k - 1)) : 0;
    const int q0 = lo - fail[static_cast<size_t>(lo)];
    if (q0 <= thr) out.push_back(q0);
    for (int t = lo; t <= hb; ++t) {
        const int p = t - fail[static_cast<size_t>(t)];
        if (p > thr && 2 * p <= t && std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    }
    std::sort(out.begin(), out.end());
}

}  // namespace detail

// Candidate smallest vertical periods of any 2D-run with top-left (i,j),
// width w and height in [2^k, 2^{k+1}).
inline std::vector<int> vperiod_candidates(const Grid& g, const Dbf2D& d, int i, int j, int w,
                                           int k) {
    if (k < 0 || (1 << k) > g.rows - i + 1 || i < 1 || j < 1 || j + w - 1 > g.cols || w < 1)
        throw std::out_of_range("vperiod_candidates: window out of bounds");
    const int hb = std::min((1 << (k + 1)) - 1, g.rows - i + 1);
    std::vector<StripId> syms;
    syms.reserve(static_cast<size_t>(hb));
    for (int x = 0; x < hb; ++x) syms.push_back(d.hstrip_id(i + x, j, j + w - 1));
    std::vector<int> fail, out;
    detail::vper_candidates_from_syms(syms, k, fail, out);
    return out;
}

struct EnumerateOptions {
    int threads = 1;
    // invoked (in deterministic task order) on every grown candidate rect
    // before verification; used by coverage tests
    std::function<void(const Rect&)> candidate_observer;
};

namespace detail {

// Exact periods plus the four one-line maximality checks. A one-row extension
// preserves the period pair iff the new row strip equals the strip vper rows
// back (a duplicated row preserves column equivalences, hence hper); columns
// symmetrically. Each check is one O(1) strip comparison.
inline std::optional<Run2D> check_run(const Grid& g, const Dbf2D& d, const Rect& r,
                                      std::vector<StripId>& syms, std::vector<int>& fail) {
    const int h = r.height(), w = r.width();
    col_syms(d, r, syms);
    const int p = strip_period(syms, fail);
    if (2 * p > w) return std::nullopt;
    row_syms(d, r, syms);
    const int q = strip_period(syms, fail);
    if (2 * q > h) return std::nullopt;

    if (r.i1 > 1 && d.hstrip_id(r.i1 - 1, r.j1, r.j2) == d.hstrip_id(r.i1 - 1 + q, r.j1, r.j2))
        return std::nullopt;
    if (r.i2 < g.rows && d.hstrip_id(r.i2 + 1, r.j1, r.j2) == d.hstrip_id(r.i2 + 1 - q, r.j1, r.j2))
        return std::nullopt;
    if (r.j1 > 1 && d.vstrip_id(r.i1, r.i2, r.j1 - 1) == d.vstrip_id(r.i1, r.i2, r.j1 - 1 + p))
        return std::nullopt;
    if (r.j2 < g.cols && d.vstrip_id(r.i1, r.i2, r.j2 + 1) == d.vstrip_id(r.i1, r.i2, r.j2 + 1 - p))
        return std::nullopt;
    return Run2D{r, p, q};
}

// Candidate rects for one (level k, base row i) task.
inline void collect_candidates(const Grid& g, const Dbf2D& d, int k, int i,
                               std::vector<Rect>& out) {
    const int m = g.rows, n = g.cols;
    const int ib = i + (1 << k) - 1;  // bottom row of the height-2^k window
    const auto meta = d.meta_row(k, i);
    const auto runs = runs1d(meta);

    std::vector<StripId> syms;
    std::vector<int> fail, qs;
    for (const auto& u : runs) {
        const int js = u.start, je = u.end, p = u.period;
        for (int w = 2 * p; w <= je - js + 1; ++w) {
            const int jr = js + w - 1;
            // top-left anchored at (i, js): grow downward
            {
                const int hb = std::min((1 << (k + 1)) - 1, m - i + 1);
                syms.clear();
                for (int x = 0; x < hb; ++x) syms.push_back(d.hstrip_id(i + x, js, jr));
                vper_candidates_from_syms(syms, k, fail, qs);
                for (int q : qs) {
                    int t = q;
                    while (t < hb && syms[static_cast<size_t>(t)] == syms[static_cast<size_t>(t - q)]) ++t;
                    if (t >= 2 * q && t >= (1 << k)) out.push_back(Rect{i, i + t - 1, js, jr});
                }
            }
            // bottom-left anchored at (ib, js): grow upward
            {
                const int hb = std::min((1 << (k + 1)) - 1, ib);
                syms.clear();
                for (int x = 0; x < hb; ++x) syms.push_back(d.hstrip_id(ib - x, js, jr));
                vper_candidates_from_syms(syms, k, fail, qs);
                for (int q : qs) {
                    int t = q;
                    while (t < hb && syms[static_cast<size_t>(t)] == syms[static_cast<size_t>(t - q)]) ++t;
                    if (t >= 2 * q && t >= (1 << k)) out.push_back(Rect{ib - t + 1, ib, js, jr});
                }
            }
        }
    }
}

}  // namespace detail

// The exact set of 2D-runs, sorted by rectangle. Candidates from every
// (level, base row, meta-run, anchor, width, vertical-period) tuple are grown
// to maximal height, deduplicated, and verified with exact smallest periods
// plus the four maximality checks.
inline std::vector<Run2D> enumerate_runs2d(const Grid& g, const Dbf2D& d,
                                           const EnumerateOptions& opt = {}) {
    std::vector<Run2D> result;
    if (g.rows < 2 || g.cols < 2) return result;

    struct Task {
        int k, i;
    };
    std::vector<Task> tasks;
    for (int k = 1; (1 << k) <= g.rows; ++k)
        for (int i = 1; i + (1 << k) - 1 <= g.rows; ++i) tasks.push_back(Task{k, i});

    std::vector<std::vector<Rect>> slots(tasks.size());
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (size_t t = 0; t < tasks.size(); ++t)
            detail::collect_candidates(g, d, tasks[t].k, tasks[t].i, slots[t]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
                detail::collect_candidates(g, d, tasks[t].k, tasks[t].i, slots[t]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<Rect> cands;
    for (const auto& slot : slots) {
        for (const auto& r : slot) {
            if (opt.candidate_observer) opt.candidate_observer(r);
            cands.push_back(r);
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<StripId> syms;
    std::vector<int> fail;
    for (const auto& r : cands)
        if (auto run = detail::check_run(g, d, r, syms, fail)) result.push_back(*run);
    return result;
}

}  // namespace rep2d
