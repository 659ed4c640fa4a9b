// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria cover the fig3 fixture counts, exhaustive and random
// oracle equivalence, the staircase algorithms, closed forms, bound
// monitoring, the vertical-period candidate property, and runtime budgets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rep2d/analyze.hpp"
#include "rep2d/brute.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/quartics.hpp"
#include "rep2d/runs2d.hpp"
#include "rep2d/staircase.hpp"

using namespace rep2d;
using clock_t_ = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

void line(int idx, bool pass, const std::string& what, double secs) {
    std::printf("criterion %d: %s - %s (%.2f s)\n", idx, pass ? "PASS" : "FAIL", what.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

bool quartics_equal_oracle(const Grid& g, const Dbf2D& d, std::span<const Run2D> runs) {
    const auto got = distinct_quartics(g, d, runs);
    const auto expect = brute::distinct_quartics(g);
    if (got.size() != expect.size()) return false;
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
    for (size_t t = 0; t < keys.size(); ++t)
        if (keys[t].h != expect[t].h || keys[t].w != expect[t].w ||
            keys[t].cells != expect[t].cells || keys[t].root_h != expect[t].root_h ||
            keys[t].root_w != expect[t].root_w || keys[t].exp_r != expect[t].exp_r ||
            keys[t].exp_c != expect[t].exp_c)
            return false;
    return true;
}

bool tandems_equal_oracle(const Grid& g, const Dbf2D& d) {
    const auto got = distinct_tandems(g, d);
    const auto expect = brute::distinct_tandems(g);
    if (got.size() != expect.size()) return false;
    std::vector<brute::TandemKey> keys;
    for (const auto& t : got)
        keys.push_back(brute::TandemKey{
            t.h, t.w,
            brute::rect_cells(
                g, Rect{t.witness.i, t.witness.i + t.h - 1, t.witness.j, t.witness.j + t.w - 1}),
            t.witness});
    std::sort(keys.begin(), keys.end());
    for (size_t t = 0; t < keys.size(); ++t)
        if (keys[t].h != expect[t].h || keys[t].w != expect[t].w ||
            keys[t].cells != expect[t].cells)
            return false;
    return true;
}

bool all_four_equal_oracle(const Grid& g) {
    const Dbf2D d(g);
    const auto runs = enumerate_runs2d(g, d);
    if (runs != brute::runs2d(g)) return false;
    if (prq_occurrences(g, runs) != brute::prq_occurrences(g)) return false;
    if (!quartics_equal_oracle(g, d, runs)) return false;
    if (!tandems_equal_oracle(g, d)) return false;
    return true;
}

void criterion1_fig3() {
    const auto t0 = clock_t_::now();
    const Grid g = make_fig3();
    AnalysisOptions opt;
    opt.tandems = false;
    opt.listings = true;
    const auto rep = analyze(g, opt);
    int containing = 0;
    for (const auto& r : rep.runs) containing += r.rect.contains(Rect{4, 5, 4, 5});
    const double secs = seconds_since(t0);
    const bool pass = rep.runs2d_count == 18 && rep.distinct_quartic_count == 11 &&
                      rep.distinct_prq_count == 2 && containing == 16 && secs < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "fig3 exact counts: runs2d=%lld quartics=%lld prq=%lld central-in-runs=%d",
                  rep.runs2d_count, rep.distinct_quartic_count, rep.distinct_prq_count,
                  containing);
    line(1, pass, buf, secs);
}

void criterion2_exhaustive_4x4() {
    const auto t0 = clock_t_::now();
    bool pass = true;
    Grid g(4, 4);
    for (int mask = 0; mask < (1 << 16) && pass; ++mask) {
        for (int c = 0; c < 16; ++c) g.cells[static_cast<size_t>(c)] = (mask >> c) & 1 ? 'b' : 'a';
        pass = all_four_equal_oracle(g);
    }
    const double secs = seconds_since(t0);
    line(2, pass && secs < 600.0, "oracle equivalence on all 65536 binary 4x4 grids", secs);
}

void criterion3_random_8x8() {
    const auto t0 = clock_t_::now();
    bool pass = true;
    detail::SeededRng rng(1927);
    for (int t = 0; t < 500 && pass; ++t)
        pass = all_four_equal_oracle(make_random(8, 8, 3, rng.bounded(1ULL << 62)));
    const double secs = seconds_since(t0);
    line(3, pass && secs < 120.0, "oracle equivalence on 500 seeded ternary 8x8 grids", secs);
}

void criterion4_staircase() {
    const auto t0 = clock_t_::now();
    bool pass = true;
    const std::vector<Shape> expect{{7, 2}, {6, 3}, {5, 6}, {2, 7}, {1, 8}};
    const std::vector<int> worked{3, 7, 6, 7, 8, 6, 2};
    pass = max_white_rectangles(worked, MwrVariant::Nsv) == expect &&
           max_white_rectangles(worked, MwrVariant::Stack) == expect;
    detail::SeededRng rng(515);
    for (int t = 0; t < 10000 && pass; ++t) {
        const int m = 1 + static_cast<int>(rng.bounded(12));
        std::vector<int> w(static_cast<size_t>(m));
        for (auto& x : w) x = 1 + static_cast<int>(rng.bounded(20));
        const auto oracle = brute::max_white_rectangles(w);
        pass = max_white_rectangles(w, MwrVariant::Nsv) == oracle &&
               max_white_rectangles(w, MwrVariant::Stack) == oracle;
    }
    const double secs_small = seconds_since(t0);

    // one million rows in under a second
    const auto t1 = clock_t_::now();
    std::vector<int> big(1000000);
    for (auto& x : big) x = 1 + static_cast<int>(rng.bounded(1000000000));
    const auto nsv = max_white_rectangles(big, MwrVariant::Nsv);
    const auto stk = max_white_rectangles(big, MwrVariant::Stack);
    const double secs_big = seconds_since(t1);
    pass = pass && nsv == stk && !nsv.empty() && secs_big < 1.0 && secs_small < 30.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "staircase variants vs oracle (10^4 cases) and m=10^6 in %.3f s", secs_big);
    line(4, pass, buf, seconds_since(t0));
}

void criterion5_closed_forms() {
    const auto t0 = clock_t_::now();
    bool pass = true;
    std::string what = "closed forms:";
    {
        const Grid g = make_unary(256, 256);
        const Dbf2D d(g);
        const auto runs = enumerate_runs2d(g, d);
        const auto occs = prq_occurrences(g, runs);
        pass = runs.size() == 1 && occs.size() == 65025;
        what += " unary256 runs=" + std::to_string(runs.size()) +
                " prq=" + std::to_string(occs.size());
    }
    for (int n : {4, 8, 16}) {
        const Grid g = make_rowladder(n, n);
        const Dbf2D d(g);
        const auto tds = distinct_tandems(g, d);
        const long long expect = static_cast<long long>(n) * (n + 1) / 2 * (n / 2);
        pass = pass && static_cast<long long>(tds.size()) == expect;
        what += " rowladder" + std::to_string(n) + "=" + std::to_string(tds.size());
    }
    line(5, pass, what, seconds_since(t0));
}

void criterion6_bounds() {
    const auto t0 = clock_t_::now();
    bool pass = true;
    std::string what = "bound monitoring:";
    for (int n : {16, 32, 64, 128}) {
        const Grid g = make_random(n, n, 2, 90000 + static_cast<std::uint64_t>(n));
        const Dbf2D d(g);
        const auto runs = enumerate_runs2d(g, d);
        const auto occs = prq_occurrences(g, runs);
        const auto qs = distinct_quartics(g, d, runs);
        int lg = 0;
        while ((1 << lg) < n) ++lg;
        const long long cap = 8LL * n * n * lg * lg;
        pass = pass && static_cast<long long>(runs.size()) <= cap &&
               static_cast<long long>(occs.size()) <= cap &&
               static_cast<long long>(qs.size()) <= cap;
        what += " n" + std::to_string(n) + "(r" + std::to_string(runs.size()) + ",o" +
                std::to_string(occs.size()) + ",q" + std::to_string(qs.size()) + ")";
    }
    // 1D bounds over a fuzz corpus
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    detail::SeededRng rng(6161);
    for (int t = 0; t < 400 && pass; ++t) {
        int n;
        std::vector<int32_t> s;
        if (t % 8 == 0) {  // structured strings
            n = 2 + static_cast<int>(rng.bounded(2048));
            s.resize(static_cast<size_t>(n));
            const int kind = t / 8 % 3;
            for (int i = 0; i < n; ++i)
                s[static_cast<size_t>(i)] = kind == 0 ? 0 : kind == 1 ? i % 2 : i % 3;
        } else {
            n = 2 + static_cast<int>(rng.bounded(1024));
            const int sigma = 2 + static_cast<int>(rng.bounded(3));
            s.resize(static_cast<size_t>(n));
            for (auto& c : s) c = static_cast<int32_t>(rng.bounded(static_cast<std::uint64_t>(sigma)));
        }
        const auto rs = runs1d(std::span<const int32_t>(s));
        if (rs.size() > static_cast<size_t>(n)) pass = false;
        if (distinct_squares(std::span<const int32_t>(s)).size() >= 2 * static_cast<size_t>(n))
            pass = false;
        const int lg = static_cast<int>(std::ceil(std::log2(n)));
        if (rho(std::span<const int32_t>(s)) > 4LL * n * lg) pass = false;
        const int cap = static_cast<int>(std::ceil(std::log(n) / std::log(phi))) + 2;
        std::vector<int> diff(static_cast<size_t>(n) + 2, 0);
        for (const auto& r : rs) {
            diff[static_cast<size_t>(r.start)] += 1;
            diff[static_cast<size_t>(r.end - 2 * r.period + 1) + 1] -= 1;
        }
        int acc = 0;
        for (int i = 1; i <= n; ++i) {
            acc += diff[static_cast<size_t>(i)];
            if (acc > cap) pass = false;
        }
    }
    line(6, pass, what + " + 1D fuzz bounds", seconds_since(t0));
}

void criterion7_claim3() {
    const auto t0 = clock_t_::now();
    bool pass = true;
    detail::SeededRng rng(737373);
    int done = 0;
    while (done < 10000 && pass) {
        const int m = 6 + static_cast<int>(rng.bounded(7));
        const int n = 6 + static_cast<int>(rng.bounded(7));
        const Grid g = make_random(m, n, 2, rng.bounded(1ULL << 62));
        const int kmax = floor_log2(m);
        for (int k = 1; k <= kmax && done < 10000; ++k) {
            if ((1 << k) > m) break;
            const int i = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - (1 << k) + 1)));
            const int j = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
            const int w = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - j + 1)));
            // count distinct prefix vertical periods p > 2^{k-1} with
            // p <= height(B')/2, cell-wise (no DBF involved)
            const int hb = std::min((1 << (k + 1)) - 1, m - i + 1);
            if (hb < (1 << k)) continue;
            std::vector<int> seen;
            for (int t = 1 << k; t <= hb; ++t) {
                // smallest vertical period of rows [i, i+t-1] x [j, j+w-1]
                int q = t;
                for (int cand = 1; cand < t; ++cand) {
                    bool ok = true;
                    for (int x = i; ok && x + cand <= i + t - 1; ++x)
                        for (int y = j; y <= j + w - 1; ++y)
                            if (g.at(x, y) != g.at(x + cand, y)) {
                                ok = false;
                                break;
                            }
                    if (ok) {
                        q = cand;
                        break;
                    }
                }
                if (q > (1 << (k - 1)) && 2 * q <= t &&
                    std::find(seen.begin(), seen.end(), q) == seen.end())
                    seen.push_back(q);
            }
            if (seen.size() > 2) pass = false;
            ++done;
        }
    }
    pass = pass && done == 10000;
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "at most two valid prefix vertical periods exceed 2^{k-1} (%d slices)", done);
    line(7, pass, buf, seconds_since(t0));
}

void criterion8_runtime() {
    const auto t0 = clock_t_::now();
    const Grid rnd = make_random(256, 256, 2, 424242);
    const auto r1 = analyze(rnd);
    const double rnd_secs = r1.timings.total_ms / 1000.0;

    const Grid uni = make_unary(256, 256);
    const auto r2 = analyze(uni);
    const double uni_secs = r2.timings.total_ms / 1000.0;

    const bool pass = rnd_secs < 60.0 && uni_secs < 120.0 && r1.runs2d_count >= 0 &&
                      r2.runs2d_count == 1;
    char buf[128];
    std::snprintf(buf, sizeof buf, "full analyze: random 256x256 in %.1f s, unary 256x256 in %.1f s",
                  rnd_secs, uni_secs);
    line(8, pass, buf, seconds_since(t0));
}

}  // namespace

int main() {
    criterion1_fig3();
    criterion2_exhaustive_4x4();
    criterion3_random_8x8();
    criterion4_staircase();
    criterion5_closed_forms();
    criterion6_bounds();
    criterion7_claim3();
    criterion8_runtime();
    if (failures == 0)
        std::printf("acceptance: all 8 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
