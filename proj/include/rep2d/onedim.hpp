// 1D stringology over integer-symbol sequences: smallest periods, runs
// (maximal repetitions), run extension, distinct squares and the rho
// statistic (sum over runs of |R| - 2 per(R) + 1).
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rep2d {

// Maximal periodic fragment [start,end] (1-based, inclusive) with its
// smallest period. Invariant: period <= length/2 and both one-symbol
// extensions change the smallest period.
struct Run1d {
    int start = 0;
    int end = 0;
    int period = 0;
    bool operator==(const Run1d&) const = default;
    auto operator<=>(const Run1d&) const = default;
};

// Distinct square factor: total length and one witness start (1-based).
struct SquareDesc {
    int length = 0;
    int start = 0;
    bool operator==(const SquareDesc&) const = default;
    auto operator<=>(const SquareDesc&) const = default;
};

// Border-based failure table; fail[t] = longest proper border of the length-t
// prefix. Smallest period of the prefix of length t is t - fail[t].
template <class Sym>
void failure_table(std::span<const Sym> s, std::vector<int>& fail) {
    const int n = static_cast<int>(s.size());
    fail.assign(static_cast<size_t>(n) + 1, 0);
    int k = 0;
    for (int t = 2; t <= n; ++t) {
        while (k > 0 && s[static_cast<size_t>(k)] != s[static_cast<size_t>(t - 1)]) k = fail[static_cast<size_t>(k)];
        if (s[static_cast<size_t>(k)] == s[static_cast<size_t>(t - 1)]) ++k;
        fail[static_cast<size_t>(t)] = k;
    }
}

template <class Sym>
int smallest_period(std::span<const Sym> s) {
    if (s.empty()) throw std::invalid_argument("smallest_period: empty sequence");
    std::vector<int> fail;
    failure_table(s, fail);
    return static_cast<int>(s.size()) - fail.back();
}

namespace detail {

// Karp-Miller-Rosenberg doubling ranks over a dense int sequence: rank[k][i]
// identifies s[i..i+2^k-1]. Counting-sort renaming keeps ids dense, so builds
// are O(n log n) and LCE queries O(log n). Buffers are reusable across calls.
struct RankTable {
    int n = 0;
    int levels = 0;                        // rank[k] defined for 2^k <= n
    std::vector<std::vector<int32_t>> rank;

    // ids must be dense in [0, n).
    void build(std::span<const int32_t> ids, std::vector<int32_t>& perm,
               std::vector<int32_t>& perm2, std::vector<int32_t>& cnt) {
        n = static_cast<int>(ids.size());
        levels = 0;
        while ((1 << levels) <= n) ++levels;  // number of usable levels
        if (static_cast<int>(rank.size()) < levels) rank.resize(static_cast<size_t>(levels));
        if (n == 0) return;
        rank[0].assign(ids.begin(), ids.end());

        perm.resize(static_cast<size_t>(n));
        perm2.resize(static_cast<size_t>(n));
        for (int k = 1; k < levels; ++k) {
            const int half = 1 << (k - 1);
            const int cnt_k = n - (1 << k) + 1;  // positions at this level
            const auto& prev = rank[static_cast<size_t>(k - 1)];
            auto& cur = rank[static_cast<size_t>(k)];
            cur.assign(static_cast<size_t>(cnt_k), 0);
            // counting sort by (prev[i], prev[i+half]) over i in [0, cnt_k)
            auto pass = [&](auto key, std::span<const int32_t> in, std::span<int32_t> out) {
                cnt.assign(static_cast<size_t>(n) + 1, 0);
                for (int32_t i : in) ++cnt[static_cast<size_t>(key(i))];
                int32_t acc = 0;
                for (auto& c : cnt) {
                    int32_t t = c;
                    c = acc;
                    acc += t;
                }
                for (int32_t i : in) out[static_cast<size_t>(cnt[static_cast<size_t>(key(i))]++)] = i;
            };
            for (int i = 0; i < cnt_k; ++i) perm[static_cast<size_t>(i)] = i;
            pass([&](int32_t i) { return prev[static_cast<size_t>(i + half)]; },
                 std::span<const int32_t>(perm.data(), static_cast<size_t>(cnt_k)),
                 std::span<int32_t>(perm2.data(), static_cast<size_t>(cnt_k)));
            pass([&](int32_t i) { return prev[static_cast<size_t>(i)]; },
                 std::span<const int32_t>(perm2.data(), static_cast<size_t>(cnt_k)),
                 std::span<int32_t>(perm.data(), static_cast<size_t>(cnt_k)));
            int32_t next = 0;
            for (int t = 0; t < cnt_k; ++t) {
                const int32_t i = perm[static_cast<size_t>(t)];
                if (t > 0) {
                    const int32_t pi = perm[static_cast<size_t>(t - 1)];
                    if (prev[static_cast<size_t>(i)] != prev[static_cast<size_t>(pi)] ||
                        prev[static_cast<size_t>(i + half)] != prev[static_cast<size_t>(pi + half)])
                        ++next;
                }
                cur[static_cast<size_t>(i)] = next;
            }
        }
    }

    // Longest common extension of suffixes at 0-based i, j.
    int lce(int i, int j) const {
        if (i == j) return n - i;
        int res = 0;
        for (int k = levels - 1; k >= 0; --k) {
            const int len = 1 << k;
            if (i + len <= n && j + len <= n &&
                rank[static_cast<size_t>(k)][static_cast<size_t>(i)] ==
                    rank[static_cast<size_t>(k)][static_cast<size_t>(j)]) {
                i += len;
                j += len;
                res += len;
                if (i >= n || j >= n) break;
            }
        }
        return res;
    }

    // Identifier of the fragment [i, i+len) as an overlapping pair of
    // power-of-two block ids; equal pairs <=> equal fragments of equal length.
    std::pair<int32_t, int32_t> frag_id(int i, int len) const {
        assert(len >= 1 && i + len <= n);
        int k = 0;
        while ((2 << k) <= len) ++k;  // 2^k <= len < 2^{k+1}
        const auto& r = rank[static_cast<size_t>(k)];
        return {r[static_cast<size_t>(i)], r[static_cast<size_t>(i + len - (1 << k))]};
    }
};

// Scratch shared by the runs machinery; thread_local per caller.
struct RunsScratch {
    RankTable fwd, rev;
    std::vector<int32_t> dense, densebuf, perm, perm2, cnt;
    std::vector<Run1d> found;

    // Densify arbitrary int32 symbols to [0, n) preserving order.
    void densify(std::span<const int32_t> s) {
        const int n = static_cast<int>(s.size());
        dense.resize(static_cast<size_t>(n));
        bool already_dense = true;
        for (int32_t v : s)
            if (v < 0 || v >= n) {
                already_dense = false;
                break;
            }
        if (already_dense) {
            std::copy(s.begin(), s.end(), dense.begin());
            return;
        }
        densebuf.assign(s.begin(), s.end());
        std::sort(densebuf.begin(), densebuf.end());
        densebuf.erase(std::unique(densebuf.begin(), densebuf.end()), densebuf.end());
        for (int i = 0; i < n; ++i) {
            auto it = std::lower_bound(densebuf.begin(), densebuf.end(), s[static_cast<size_t>(i)]);
            dense[static_cast<size_t>(i)] = static_cast<int32_t>(it - densebuf.begin());
        }
    }
};

inline RunsScratch& runs_scratch() {
    static thread_local RunsScratch scratch;
    return scratch;
}

}  // namespace detail

// All runs of s, sorted by (start, end). Detection: for each candidate period
// p, every run with that smallest period spans some aligned position pair
// (q-p, q) with q a multiple of p; forward/backward LCE around the pair
// recovers the maximal extent. The extent's smallest period equals the
// smallest p that detects it, so dedup by extent keeps exact periods.
inline std::vector<Run1d> runs1d(std::span<const int32_t> s) {
    const int n = static_cast<int>(s.size());
    std::vector<Run1d> out;
    if (n < 2) return out;

    auto& ws = detail::runs_scratch();
    ws.densify(s);
    ws.fwd.build(ws.dense, ws.perm, ws.perm2, ws.cnt);
    std::reverse(ws.dense.begin(), ws.dense.end());
    ws.rev.build(ws.dense, ws.perm, ws.perm2, ws.cnt);
    std::reverse(ws.dense.begin(), ws.dense.end());

    auto lce_fwd = [&](int i, int j) { return ws.fwd.lce(i, j); };
    // longest common suffix of prefixes ending at i, j (inclusive)
    auto lce_bwd = [&](int i, int j) { return ws.rev.lce(n - 1 - i, n - 1 - j); };

    auto& found = ws.found;
    found.clear();
    for (int p = 1; 2 * p <= n; ++p) {
        int last_end = -1;  // consecutive anchors inside one run repeat its extent
        for (int q = p; q < n; q += p) {
            if (s[static_cast<size_t>(q)] != s[static_cast<size_t>(q - p)]) continue;
            const int r = lce_fwd(q - p, q);
            const int l = (q - p == 0) ? 0 : lce_bwd(q - p - 1, q - 1);
            if (l + r >= p) {
                const int start = q - p - l;      // 0-based
                const int end = q + r - 1;        // 0-based inclusive
                if (end != last_end) found.push_back(Run1d{start + 1, end + 1, p});
                last_end = end;
            }
        }
    }
    std::sort(found.begin(), found.end());
    for (const auto& r : found)
        if (out.empty() || out.back().start != r.start || out.back().end != r.end) out.push_back(r);
    return out;
}

template <class Sym>
std::vector<Run1d> runs1d(std::span<const Sym> s) {
    std::vector<int32_t> tmp(s.size());
    {
        std::vector<Sym> vals(s.begin(), s.end());
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (size_t i = 0; i < s.size(); ++i)
            tmp[i] = static_cast<int32_t>(std::lower_bound(vals.begin(), vals.end(), s[i]) - vals.begin());
    }
    return runs1d(std::span<const int32_t>(tmp));
}

// The unique run containing the periodic fragment [a,b] (1-based) with the
// same smallest period.
template <class Sym>
Run1d extend_to_run(std::span<const Sym> s, int a, int b) {
    const int n = static_cast<int>(s.size());
    if (!(1 <= a && a <= b && b <= n)) throw std::invalid_argument("extend_to_run: bad fragment");
    const int p = smallest_period(s.subspan(static_cast<size_t>(a - 1), static_cast<size_t>(b - a + 1)));
    if (2 * p > b - a + 1) throw std::invalid_argument("extend_to_run: fragment is not periodic");
    int lo = a, hi = b;  // 1-based
    while (lo > 1 && s[static_cast<size_t>(lo - 2)] == s[static_cast<size_t>(lo - 2 + p)]) --lo;
    while (hi < n && s[static_cast<size_t>(hi)] == s[static_cast<size_t>(hi - p)]) ++hi;
    return Run1d{lo, hi, p};
}

inline long long rho(std::span<const int32_t> s) {
    long long sum = 0;
    for (const auto& r : runs1d(s)) sum += (r.end - r.start + 1) - 2LL * r.period + 1;
    return sum;
}

// Distinct square factors, deduplicated by content via doubling-rank pair
// identifiers; witness is the smallest start. Sorted by (length, start).
inline std::vector<SquareDesc> distinct_squares(std::span<const int32_t> s) {
    const int n = static_cast<int>(s.size());
    std::vector<SquareDesc> out;
    if (n < 2) return out;
    const auto runs = runs1d(s);  // scratch's fwd table now matches s
    auto& ws = detail::runs_scratch();

    struct Cand {
        int len;
        int32_t id1, id2;
        int start;
        auto operator<=>(const Cand&) const = default;
    };
    std::vector<Cand> cands;
    for (const auto& r : runs) {
        const int len = r.end - r.start + 1;
        for (int half = r.period; 2 * half <= len; half += r.period) {
            const int last = r.end - 2 * half + 1;
            const int hi = std::min(r.start + r.period - 1, last);
            for (int st = r.start; st <= hi; ++st) {
                auto [a, b] = ws.fwd.frag_id(st - 1, 2 * half);
                cands.push_back(Cand{2 * half, a, b, st});
            }
        }
    }
    std::sort(cands.begin(), cands.end());
    for (size_t t = 0; t < cands.size(); ++t) {
        if (t > 0 && cands[t].len == cands[t - 1].len && cands[t].id1 == cands[t - 1].id1 &&
            cands[t].id2 == cands[t - 1].id2)
            continue;
        out.push_back(SquareDesc{cands[t].len, cands[t].start});
    }
    return out;
}

}  // namespace rep2d
