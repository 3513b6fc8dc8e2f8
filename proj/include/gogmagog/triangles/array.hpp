#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gogmagog {

// Entries m_{i,j}, 1 <= j <= i <= n, with absent positions allowed so that the
// same type carries trapezoids, pentagons and (s,t)-trees.
struct TriangularArray {
    static constexpr int kAbsent = INT_MIN;

    int n = 0;
    std::vector<int> cells;

    TriangularArray() = default;
    explicit TriangularArray(int rows) : n(rows), cells(static_cast<size_t>(rows) * (rows + 1) / 2, kAbsent) {}

    static size_t index(int i, int j) { return static_cast<size_t>(i - 1) * i / 2 + (j - 1); }
    bool inside(int i, int j) const { return i >= 1 && i <= n && j >= 1 && j <= i; }
    bool has(int i, int j) const { return inside(i, j) && cells[index(i, j)] != kAbsent; }
    int at(int i, int j) const { return cells[index(i, j)]; }
    void set(int i, int j, int v) { cells[index(i, j)] = v; }
    void clear(int i, int j) { cells[index(i, j)] = kAbsent; }

    // present entries of row i, left to right, and their columns
    std::vector<int> row(int i) const;
    std::vector<int> row_columns(int i) const;
    size_t entry_count() const;

    bool operator==(const TriangularArray& o) const = default;
};

// Build from rows given top to bottom; row i lists entries for columns first_col[i]..
TriangularArray from_rows(int n, const std::vector<std::vector<int>>& rows, const std::vector<int>& first_col);

struct StatVector {
    int inv = 0;
    int inv_prime = 0;
    int inv_J = 0;
    int inv_prime_I = 0;
    int minima = 0;
    int maxima = 0;
    int top_minima = 0;
    int top_maxima = 0;
    int bottom_minima = 0;
    int bottom_maxima = 0;
    int top_entry = 0;
    std::vector<int> bottom_row;
    bool bottom_right_is_max = false;  // b_k = m+k (Gog), b_kL = m+kL (pentagon)
    bool bottom_left_is_min = false;   // b_{n-kR+1} = n-kR+1 (pentagon)
    int minus_ones = 0;                // strict double inequalities above the bottom row
};

using Visitor = std::function<void(const TriangularArray&, const StatVector&)>;

struct EnumBudget {
    uint64_t max_objects = 5'000'000;
};

}  // namespace gogmagog
