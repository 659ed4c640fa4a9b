// Staircase grids (per-row white-prefix lengths) and the Max White
// Rectangles problem: the dominance-maximal shapes among all all-white
// rectangles, in O(m) time via nearest-smaller-value tables or a stack scan.
#pragma once

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d {

// NSVUp[i] = max{j < i : Whites[j] < Whites[i]} (0 when none),
// NSVDown[i] = min{j > i : Whites[j] < Whites[i]} (m+1 when none);
// both returned 1-based in [0, m+1].
struct NsvTables {
    std::vector<int> up, down;
};

namespace detail {
inline void validate_staircase(std::span<const int> whites) {
    if (whites.empty()) throw std::invalid_argument("staircase: empty Whites array");
    for (int w : whites)
        if (w < 1) throw std::invalid_argument("staircase: Whites values must be >= 1");
}
}  // namespace detail

inline NsvTables nsv_tables(std::span<const int> whites) {
    detail::validate_staircase(whites);
    const int m = static_cast<int>(whites.size());
    NsvTables t;
    t.up.assign(static_cast<size_t>(m) + 1, 0);
    t.down.assign(static_cast<size_t>(m) + 1, m + 1);
    std::vector<int> stack;
    stack.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        while (!stack.empty() && whites[static_cast<size_t>(stack.back() - 1)] >= whites[static_cast<size_t>(i - 1)])
            stack.pop_back();
        t.up[static_cast<size_t>(i)] = stack.empty() ? 0 : stack.back();
        stack.push_back(i);
    }
    stack.clear();
    for (int i = m; i >= 1; --i) {
        while (!stack.empty() && whites[static_cast<size_t>(stack.back() - 1)] >= whites[static_cast<size_t>(i - 1)])
            stack.pop_back();
        t.down[static_cast<size_t>(i)] = stack.empty() ? m + 1 : stack.back();
        stack.push_back(i);
    }
    return t;
}

enum class MwrVariant { Nsv, Stack };

// Shape candidate with the top row of a realizing rectangle (columns 1..w).
struct AnchoredShape {
    Shape shape;
    int top_row = 0;
};

namespace detail {

// Second phase shared by both variants: keep only dominance-maximal shapes
// from the per-height best-width table. Output sorted by decreasing height.
template <class Emit>
void report_maximal(std::span<const int> max_width, std::span<const int> anchor, Emit&& emit) {
    int mw = 0;
    for (int h = static_cast<int>(max_width.size()) - 1; h >= 1; --h) {
        if (max_width[static_cast<size_t>(h)] > mw) {
            emit(h, max_width[static_cast<size_t>(h)], anchor.empty() ? 0 : anchor[static_cast<size_t>(h)]);
            mw = max_width[static_cast<size_t>(h)];
        }
    }
}

inline void mwr_candidates_nsv(std::span<const int> whites, std::vector<int>& max_width,
                               std::vector<int>& anchor) {
    const int m = static_cast<int>(whites.size());
    const auto nsv = nsv_tables(whites);
    max_width.assign(static_cast<size_t>(m) + 1, 0);
    anchor.assign(static_cast<size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        const int h = nsv.down[static_cast<size_t>(i)] - nsv.up[static_cast<size_t>(i)] - 1;
        if (whites[static_cast<size_t>(i - 1)] > max_width[static_cast<size_t>(h)]) {
            max_width[static_cast<size_t>(h)] = whites[static_cast<size_t>(i - 1)];
            anchor[static_cast<size_t>(h)] = nsv.up[static_cast<size_t>(i)] + 1;
        }
    }
}

// Stack scan from the bottom; when index k is popped at i, the rows strictly
// between i and the element below k all have Whites >= Whites[k].
inline void mwr_candidates_stack(std::span<const int> whites, std::vector<int>& max_width) {
    const int m = static_cast<int>(whites.size());
    max_width.assign(static_cast<size_t>(m) + 1, 0);
    auto val = [&](int i) { return (i == 0 || i == m + 1) ? 0 : whites[static_cast<size_t>(i - 1)]; };
    std::vector<int> stack;
    stack.reserve(static_cast<size_t>(m) + 2);
    stack.push_back(m + 1);
    for (int i = m; i >= 0; --i) {
        while (val(i) < val(stack.back())) {
            const int k = stack.back();
            stack.pop_back();
            const int h = stack.back() - i - 1;
            if (val(k) > max_width[static_cast<size_t>(h)]) max_width[static_cast<size_t>(h)] = val(k);
        }
        if (val(stack.back()) == val(i)) stack.pop_back();
        stack.push_back(i);
    }
}

}  // namespace detail

// Dominance-maximal shapes of all-white rectangles in the staircase,
// sorted by decreasing height (hence increasing width).
inline std::vector<Shape> max_white_rectangles(std::span<const int> whites,
                                               MwrVariant variant = MwrVariant::Nsv) {
    detail::validate_staircase(whites);
    std::vector<int> max_width, anchor;
    if (variant == MwrVariant::Nsv)
        detail::mwr_candidates_nsv(whites, max_width, anchor);
    else
        detail::mwr_candidates_stack(whites, max_width);
    std::vector<Shape> out;
    detail::report_maximal(max_width, std::span<const int>(),
                           [&](int h, int w, int) { out.push_back(Shape{h, w}); });
    return out;
}

// As above but with a realizing top row per shape (NSV variant).
inline std::vector<AnchoredShape> max_white_rectangles_anchored(std::span<const int> whites) {
    detail::validate_staircase(whites);
    std::vector<int> max_width, anchor;
    detail::mwr_candidates_nsv(whites, max_width, anchor);
    std::vector<AnchoredShape> out;
    detail::report_maximal(max_width, anchor,
                           [&](int h, int w, int row) { out.push_back(AnchoredShape{Shape{h, w}, row}); });
    return out;
}

}  // namespace rep2d
