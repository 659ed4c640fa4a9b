// Oracle harness: runs every efficient/brute pair over exhaustive small
// cases plus seeded random trials and logs each discrepancy with a
// reproducer grid.
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rep2d/analyze.hpp"
#include "rep2d/brute.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/quartics.hpp"
#include "rep2d/runs2d.hpp"
#include "rep2d/staircase.hpp"

namespace rep2d {

struct VerifyOptions {
    bool exhaustive_binary_4x4 = false;
    int max_n = 6;
    int sigma = 2;
    int trials = 200;
    std::uint64_t seed = 7;
    bool inject_fault = false;  // test-only hook: perturbs the efficient runs
    int max_reproducers = 5;    // full reproducer grids printed before truncation
};

namespace detail {

struct VerifyState {
    const VerifyOptions& opt;
    std::ostream& log;
    int discrepancies = 0;
    int printed = 0;

    void report(const Grid& g, const std::string& what, const std::string& diff) {
        ++discrepancies;
        if (printed < opt.max_reproducers) {
            ++printed;
            log << "DISCREPANCY [" << what << "]: " << diff << "\nreproducer grid:\n"
                << serialize(g);
        } else {
            log << "DISCREPANCY [" << what << "]: " << diff << " (reproducer suppressed)\n";
        }
    }
};

template <class T>
std::string count_diff(const std::vector<T>& expect, const std::vector<T>& got) {
    std::ostringstream os;
    os << "expected " << expect.size() << " items, got " << got.size();
    return os.str();
}

inline void check_grid(VerifyState& st, const Grid& g) {
    Dbf2D dbf(g);
    auto runs = enumerate_runs2d(g, dbf);
    if (st.opt.inject_fault && !runs.empty()) runs.pop_back();

    {
        auto expect = brute::runs2d(g);
        if (runs != expect) st.report(g, "runs2d", count_diff(expect, runs));
    }
    {
        auto got = prq_occurrences(g, runs);
        auto expect = brute::prq_occurrences(g);
        if (got != expect) st.report(g, "prq_occurrences", count_diff(expect, got));
    }
    {
        auto got = distinct_quartics(g, dbf, runs);
        std::vector<brute::QuarticKey> keys;
        for (const auto& q : got) {
            brute::QuarticKey k;
            k.h = q.exp_r * q.root_h;
            k.w = q.exp_c * q.root_w;
            k.cells = brute::rect_cells(
                g, Rect{q.witness.i, q.witness.i + k.h - 1, q.witness.j, q.witness.j + k.w - 1});
            k.root_h = q.root_h;
            k.root_w = q.root_w;
            k.exp_r = q.exp_r;
            k.exp_c = q.exp_c;
            keys.push_back(std::move(k));
        }
        std::sort(keys.begin(), keys.end());
        auto expect = brute::distinct_quartics(g);
        bool same = keys.size() == expect.size();
        for (size_t t = 0; same && t < keys.size(); ++t)
            same = keys[t].h == expect[t].h && keys[t].w == expect[t].w &&
                   keys[t].cells == expect[t].cells && keys[t].root_h == expect[t].root_h &&
                   keys[t].root_w == expect[t].root_w && keys[t].exp_r == expect[t].exp_r &&
                   keys[t].exp_c == expect[t].exp_c;
        if (!same) st.report(g, "distinct_quartics", count_diff(expect, keys));
    }
    {
        auto got = distinct_tandems(g, dbf);
        std::vector<brute::TandemKey> keys;
        for (const auto& t : got)
            keys.push_back(brute::TandemKey{
                t.h, t.w,
                brute::rect_cells(g, Rect{t.witness.i, t.witness.i + t.h - 1, t.witness.j,
                                          t.witness.j + t.w - 1}),
                t.witness});
        std::sort(keys.begin(), keys.end());
        auto expect = brute::distinct_tandems(g);
        bool same = keys.size() == expect.size();
        for (size_t t = 0; same && t < keys.size(); ++t)
            same = keys[t].h == expect[t].h && keys[t].w == expect[t].w &&
                   keys[t].cells == expect[t].cells;
        if (!same) st.report(g, "distinct_tandems", count_diff(expect, keys));
    }
}

inline void check_staircases(VerifyState& st, detail::SeededRng& rng) {
    for (int t = 0; t < 2000; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(12));
        std::vector<int> whites(static_cast<size_t>(m));
        for (auto& w : whites) w = 1 + static_cast<int>(rng.bounded(20));
        auto expect = brute::max_white_rectangles(whites);
        auto nsv = max_white_rectangles(whites, MwrVariant::Nsv);
        auto stk = max_white_rectangles(whites, MwrVariant::Stack);
        if (nsv != expect || stk != expect) {
            ++st.discrepancies;
            st.log << "DISCREPANCY [max_white_rectangles]: Whites =";
            for (int w : whites) st.log << ' ' << w;
            st.log << '\n';
        }
    }
}

inline void check_unions(VerifyState& st, detail::SeededRng& rng) {
    for (int t = 0; t < 300; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(12));
        const int n = 1 + static_cast<int>(rng.bounded(12));
        std::vector<RectFamily> fams(1 + static_cast<size_t>(rng.bounded(3)));
        for (auto& f : fams) {
            const int cnt = static_cast<int>(rng.bounded(6));
            for (int c = 0; c < cnt; ++c) {
                Rect r;
                r.i1 = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m)));
                r.i2 = r.i1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - r.i1 + 1)));
                r.j1 = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
                r.j2 = r.j1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - r.j1 + 1)));
                f.rects.push_back(r);
            }
        }
        auto got = union_report(fams, m, n);
        auto expect = brute::union_report(fams, m, n);
        if (got != expect) {
            ++st.discrepancies;
            st.log << "DISCREPANCY [union_report]: " << m << "x" << n << " seeded case " << t
                   << '\n';
        }
    }
}

}  // namespace detail

// Returns the number of discrepancies (0 = all efficient/brute pairs agree).
inline int run_verify(const VerifyOptions& opt, std::ostream& log) {
    if (opt.max_n > 10 || opt.max_n < 1)
        throw std::invalid_argument("verify: max grid dimension must be in [1,10]");
    if (opt.sigma < 1 || opt.sigma > 94)
        throw std::invalid_argument("verify: sigma must be in [1,94]");
    detail::VerifyState st{opt, log};

    // fixtures
    detail::check_grid(st, make_fig3());
    detail::check_grid(st, make_unary(4, 4));
    detail::check_grid(st, make_rowladder(4, 4));

    // exhaustive binary grids with up to 9 cells
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            Grid g(m, n);
            const int cells = m * n;
            for (int mask = 0; mask < (1 << cells); ++mask) {
                for (int c = 0; c < cells; ++c) g.cells[static_cast<size_t>(c)] = (mask >> c) & 1 ? 'b' : 'a';
                detail::check_grid(st, g);
            }
        }

    if (opt.exhaustive_binary_4x4) {
        Grid g(4, 4);
        for (int mask = 0; mask < (1 << 16); ++mask) {
            for (int c = 0; c < 16; ++c) g.cells[static_cast<size_t>(c)] = (mask >> c) & 1 ? 'b' : 'a';
            detail::check_grid(st, g);
        }
    }

    // seeded random trials
    detail::SeededRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        const int m = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(opt.max_n - 1)));
        const int n = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(opt.max_n - 1)));
        detail::check_grid(st, make_random(m, n, opt.sigma, rng.bounded(1ULL << 62)));
    }

    detail::check_staircases(st, rng);
    detail::check_unions(st, rng);

    log << "verify: " << st.discrepancies << " discrepancies\n";
    return st.discrepancies;
}

}  // namespace rep2d
