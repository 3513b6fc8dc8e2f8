#pragma once

#include "gogmagog/polyring/poly.hpp"
#include "gogmagog/triangles/array.hpp"

#include <optional>
#include <vector>

namespace gogmagog {

// s = (s_1..s_l) weakly decreasing, t = (t_{n-r+1}..t_n) weakly increasing.
struct STTreeShape {
    int n = 0;
    std::vector<int> s;
    std::vector<int> t;

    int l() const { return static_cast<int>(s.size()); }
    int r() const { return static_cast<int>(t.size()); }
    int s_at(int i) const { return (i >= 1 && i <= l()) ? s[i - 1] : 0; }          // s_i, 0 beyond l
    int t_at(int i) const { return (i > n - r() && i <= n) ? t[i - (n - r()) - 1] : 0; }  // t_i, 0 before n-r+1
};

struct TopRestriction {
    int a = 0, lo = 0, hi = 0;
};

// Geometry of a shape: surviving cells, the fixed diagonal bottoms and the
// bottom cells of every NE- and SE-diagonal. Throws PreconditionError for
// malformed or interfering shapes.
struct STTreeLayout {
    int n = 0;
    TriangularArray mask;                    // 0 where a cell survives
    std::vector<std::pair<int, int>> fixed;  // cell of prescribed bottom for diagonal d = 1..n
    std::vector<std::pair<int, int>> ne_bottom, se_bottom;  // per diagonal, (0,0) if empty
    bool regular(int i, int j) const { return mask.has(i, j) && mask.has(i + 1, j) && mask.has(i + 1, j + 1); }
};

STTreeLayout st_tree_layout(const STTreeShape& shape);

// Exception sets: I subset {1} u {i : s_{i-1} > s_i}, J subset {n} u {j : t_j < t_{j+1}}.
void check_exception_sets(const STTreeShape& shape, const std::vector<int>& I, const std::vector<int>& J);
std::vector<int> admissible_I(const STTreeShape& shape);
std::vector<int> admissible_J(const STTreeShape& shape);

// Brute-force enumeration with inv_J / inv'_I filled into StatVector.
uint64_t enumerate_st_trees(const STTreeShape& shape, const std::vector<int>& diag_bottoms, const std::vector<int>& I,
                            const std::vector<int>& J, const std::optional<TopRestriction>& top, const Visitor& visit);

// sum of u^inv_J v^inv'_I over the trees
ParamPoly st_tree_generating_function(const STTreeShape& shape, const std::vector<int>& diag_bottoms, const std::vector<int>& I = {},
                                      const std::vector<int>& J = {}, const std::optional<TopRestriction>& top = std::nullopt);

}  // namespace gogmagog
