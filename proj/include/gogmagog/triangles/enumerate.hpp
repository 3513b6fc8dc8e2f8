#pragma once

#include "gogmagog/polyring/poly.hpp"
#include "gogmagog/triangles/array.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gogmagog {

// ---- monotone triangles and Gelfand-Tsetlin patterns ----

// Rows strictly increasing above a weakly increasing bottom row.
uint64_t enumerate_monotone_triangles(const std::vector<int>& bottom, const Visitor& visit, const EnumBudget& budget = {});
// All rows weakly increasing (interlacing only).
uint64_t enumerate_gt_patterns(const std::vector<int>& bottom, const Visitor& visit, const EnumBudget& budget = {});

StatVector monotone_triangle_stats(const TriangularArray& m);
bool is_monotone_triangle(const TriangularArray& m);

// sum over monotone triangles of u^inv v^inv'
ParamPoly mt_generating_function(const std::vector<int>& bottom);
// count by apex value
std::map<int, uint64_t> mt_counts_by_top(const std::vector<int>& bottom);

// prod_{i<j} (b_j - b_i + j - i)/(j - i)
BigRat gt_count_formula(const std::vector<int>& bottom);
// prod_{i<j} (b_j - b_i)/(j - i)
BigRat strict_gt_count_formula(const std::vector<int>& bottom);

// ---- Gog trapezoids ----
bool is_gog_trapezoid(int m, int n, int k, const TriangularArray& t);
StatVector gog_stats(int m, int n, int k, const TriangularArray& t);
std::vector<std::vector<int>> gog_bottom_rows(int m, int k);
uint64_t enumerate_gog_trapezoids(int m, int n, int k, const std::optional<std::vector<int>>& bottom, const Visitor& visit,
                                  const EnumBudget& budget = {});

// ---- Magog trapezoids ----
bool is_magog_trapezoid(int m, int n, int k, const TriangularArray& t);
StatVector magog_stats(int m, int n, int k, const TriangularArray& t);
// weakly increasing b_{n-k+1..n} with 1 <= b_j <= m+j
std::vector<std::vector<int>> magog_bottom_rows(int m, int n, int k);
uint64_t enumerate_magog_trapezoids(int m, int n, int k, const Visitor& visit, const EnumBudget& budget = {});

// ---- Gog pentagons ----
bool is_gog_pentagon(int m, int n, int kL, int kR, const TriangularArray& t);
StatVector pentagon_stats(int m, int n, int kL, int kR, const TriangularArray& t);
uint64_t enumerate_gog_pentagons(int m, int n, int kL, int kR, const Visitor& visit, const EnumBudget& budget = {});

// ---- Conjecture 1 ----
struct ConjectureTable {
    int m = 0, n = 0, k = 0;
    std::map<std::pair<int, int>, uint64_t> gog;           // (minima, maxima) -> count
    std::map<std::pair<int, int>, uint64_t> magog;         // (maxima, minima) -> count
    bool match = false;
};
ConjectureTable conjecture_check(int m, int n, int k, const EnumBudget& budget = {});

}  // namespace gogmagog
