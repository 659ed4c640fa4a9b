// Dictionary of Basic Factors in 2D: exact equality identifiers for every
// 2^k x 2^l block, built by doubling with counting-sort renaming (no hashing).
// Arbitrary subarrays get identifiers as quadruples of corner block ids.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d {

// Identifier of an arbitrary subarray: four corner-anchored power-of-two
// block ids plus dimensions. For equal dimensions, equal ids <=> equal cells.
struct RectId {
    std::array<int32_t, 4> id{};
    int h = 0;
    int w = 0;
    bool operator==(const RectId&) const = default;
    auto operator<=>(const RectId&) const = default;
};

// Two overlapping power-of-two strip ids covering a row or column segment;
// equal pairs <=> equal segments of equal length.
struct StripId {
    int32_t a = 0;
    int32_t b = 0;
    bool operator==(const StripId&) const = default;
    auto operator<=>(const StripId&) const = default;
};

inline int floor_log2(int x) {
    assert(x >= 1);
    return std::bit_width(static_cast<unsigned>(x)) - 1;
}

class Dbf2D {
  public:
    explicit Dbf2D(const Grid& g) : m_(g.rows), n_(g.cols) {
        kmax_ = floor_log2(m_);
        lmax_ = floor_log2(n_);
        tab_.resize(static_cast<size_t>(kmax_ + 1) * (lmax_ + 1));

        // level (0,0): dense ids straight from the 256 possible byte values
        {
            std::array<int32_t, 256> map;
            map.fill(-1);
            for (Symbol c : g.cells) map[c] = 0;
            int32_t next = 0;
            for (auto& v : map)
                if (v == 0) v = next++;
            auto& t0 = tab_[0];
            t0.resize(g.cells.size());
            for (size_t i = 0; i < g.cells.size(); ++i) t0[i] = map[g.cells[i]];
        }
        // widen: level (0,l) from (0,l-1); then heighten: (k,l) from (k-1,l)
        for (int l = 1; l <= lmax_; ++l)
            rename_level(0, l, 0, l - 1, /*row_step=*/0, /*col_step=*/1 << (l - 1));
        for (int k = 1; k <= kmax_; ++k)
            for (int l = 0; l <= lmax_; ++l)
                rename_level(k, l, k - 1, l, /*row_step=*/1 << (k - 1), /*col_step=*/0);
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int kmax() const { return kmax_; }
    int lmax() const { return lmax_; }

    // id of the 2^k x 2^l block with top-left (i,j); 1-based.
    int32_t block_id(int k, int l, int i, int j) const {
        assert(0 <= k && k <= kmax_ && 0 <= l && l <= lmax_);
        assert(1 <= i && i + (1 << k) - 1 <= m_ && 1 <= j && j + (1 << l) - 1 <= n_);
        return tab_[static_cast<size_t>(k) * (lmax_ + 1) + l]
                   [static_cast<size_t>(i - 1) * (n_ - (1 << l) + 1) + (j - 1)];
    }

    // number of distinct ids at a level (for tests)
    int32_t level_id_count(int k, int l) const {
        const auto& t = tab_[static_cast<size_t>(k) * (lmax_ + 1) + l];
        int32_t mx = -1;
        for (int32_t v : t) mx = std::max(mx, v);
        return mx + 1;
    }

    RectId rect_id(const Rect& r) const {
        if (!r.within(m_, n_)) throw std::out_of_range("rect_id: rect out of bounds");
        const int k = floor_log2(r.height());
        const int l = floor_log2(r.width());
        const int bi = r.i2 - (1 << k) + 1;
        const int bj = r.j2 - (1 << l) + 1;
        return RectId{{block_id(k, l, r.i1, r.j1), block_id(k, l, r.i1, bj),
                       block_id(k, l, bi, r.j1), block_id(k, l, bi, bj)},
                      r.height(), r.width()};
    }

    bool eq_rect(const Rect& a, const Rect& b) const {
        if (a.height() != b.height() || a.width() != b.width())
            throw std::invalid_argument("eq_rect: dimension mismatch");
        return rect_id(a) == rect_id(b);
    }

    // column segment A[i1..i2, j]
    StripId vstrip_id(int i1, int i2, int j) const {
        if (!(1 <= i1 && i1 <= i2 && i2 <= m_ && 1 <= j && j <= n_))
            throw std::out_of_range("vstrip_id: segment out of bounds");
        const int k = floor_log2(i2 - i1 + 1);
        return StripId{block_id(k, 0, i1, j), block_id(k, 0, i2 - (1 << k) + 1, j)};
    }

    // row segment A[i, j1..j2]
    StripId hstrip_id(int i, int j1, int j2) const {
        if (!(1 <= j1 && j1 <= j2 && j2 <= n_ && 1 <= i && i <= m_))
            throw std::out_of_range("hstrip_id: segment out of bounds");
        const int l = floor_log2(j2 - j1 + 1);
        return StripId{block_id(0, l, i, j1), block_id(0, l, i, j2 - (1 << l) + 1)};
    }

    bool eq_vstrip(int i1, int i2, int j, int j2col) const {
        return vstrip_id(i1, i2, j) == vstrip_id(i1, i2, j2col);
    }
    bool eq_hstrip(int i, int i2row, int j1, int j2) const {
        return hstrip_id(i, j1, j2) == hstrip_id(i2row, j1, j2);
    }

    // Row i of the height-2^k column-strip table: the meta-string H^k_i.
    std::span<const int32_t> meta_row(int k, int i) const {
        assert(0 <= k && k <= kmax_ && 1 <= i && i + (1 << k) - 1 <= m_);
        const auto& t = tab_[static_cast<size_t>(k) * (lmax_ + 1)];
        return std::span<const int32_t>(t.data() + static_cast<size_t>(i - 1) * n_,
                                        static_cast<size_t>(n_));
    }

  private:
    // Rename blocks at (k,l) from pairs of blocks at (pk,pl) offset by
    // (row_step, col_step). Ids stay dense via two counting-sort passes.
    void rename_level(int k, int l, int pk, int pl, int row_step, int col_step) {
        const int rcnt = m_ - (1 << k) + 1;
        const int ccnt = n_ - (1 << l) + 1;
        const int pccnt = n_ - (1 << pl) + 1;
        const auto& prev = tab_[static_cast<size_t>(pk) * (lmax_ + 1) + pl];
        auto& cur = tab_[static_cast<size_t>(k) * (lmax_ + 1) + l];
        const size_t total = static_cast<size_t>(rcnt) * ccnt;
        cur.assign(total, 0);

        auto first_key = [&](size_t pos) {
            const int i = static_cast<int>(pos) / ccnt, j = static_cast<int>(pos) % ccnt;
            return prev[static_cast<size_t>(i) * pccnt + j];
        };
        auto second_key = [&](size_t pos) {
            const int i = static_cast<int>(pos) / ccnt, j = static_cast<int>(pos) % ccnt;
            return prev[static_cast<size_t>(i + row_step) * pccnt + (j + col_step)];
        };

        perm_.resize(total);
        perm2_.resize(total);
        for (size_t t = 0; t < total; ++t) perm_[t] = static_cast<int32_t>(t);
        const size_t nbuckets = prev.size() + 1;
        auto pass = [&](auto key, std::vector<int32_t>& in, std::vector<int32_t>& out) {
            cnt_.assign(nbuckets, 0);
            for (size_t t = 0; t < total; ++t) ++cnt_[static_cast<size_t>(key(static_cast<size_t>(in[t])))];
            int32_t acc = 0;
            for (auto& c : cnt_) {
                int32_t v = c;
                c = acc;
                acc += v;
            }
            for (size_t t = 0; t < total; ++t) {
                const int32_t p = in[t];
                out[static_cast<size_t>(cnt_[static_cast<size_t>(key(static_cast<size_t>(p)))]++)] = p;
            }
        };
        pass(second_key, perm_, perm2_);
        pass(first_key, perm2_, perm_);

        int32_t next = 0;
        for (size_t t = 0; t < total; ++t) {
            const size_t pos = static_cast<size_t>(perm_[t]);
            if (t > 0) {
                const size_t pp = static_cast<size_t>(perm_[t - 1]);
                if (first_key(pos) != first_key(pp) || second_key(pos) != second_key(pp)) ++next;
            }
            cur[pos] = next;
        }
    }

    int m_, n_, kmax_, lmax_;
    std::vector<std::vector<int32_t>> tab_;
    std::vector<int32_t> perm_, perm2_, cnt_;
};

}  // namespace rep2d
