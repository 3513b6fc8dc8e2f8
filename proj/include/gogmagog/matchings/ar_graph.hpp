#pragma once

#include "gogmagog/polyring/poly.hpp"
#include "gogmagog/triangles/array.hpp"
#include "gogmagog/triangles/asm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gogmagog {

// Cell (r,c), 0 <= r < n, 0 <= c < m, is a diamond with top T(r,c), bottom T(r+1,c),
// left S(r,c) and right S(r,c+1). Its edges, clockwise from the north-west one:
//
//            T(r,c)
//      NW:1 /      \ NE:1
//     S(r,c)        S(r,c+1)
//   SW:1-u  \      / SE:u
//           T(r+1,c)
//
// Every bottom vertex T(n,c) whose column c+1 is not in b gets a pendant edge.
enum class EdgeWeight { one, u, one_minus_u };

struct ARVertex {
    char kind = 'T';  // 'T' cell top/bottom, 'S' cell side, 'P' pendant end
    int r = 0, c = 0;
    bool operator==(const ARVertex&) const = default;
};

struct AREdge {
    int a = 0, b = 0;  // vertex indices
    EdgeWeight weight = EdgeWeight::one;
    int cell_r = -1, cell_c = -1;  // -1 for pendant edges
    std::string name;              // NW, NE, SE, SW, pendant
};

struct ARGraph {
    int n = 0, m = 0;
    std::vector<int> b;
    std::vector<ARVertex> vertices;
    std::vector<AREdge> edges;
};

ARGraph ar_graph(int n, int m, const std::vector<int>& b);

struct MatchingSum {
    ParamPoly value;          // polynomial in u
    uint64_t matchings = 0;   // unweighted count
    bool odd_vertex_count = false;
};

MatchingSum weighted_matching_sum(const ARGraph& g, uint64_t max_matchings = 50'000'000);

// every perfect matching as a list of edge indices
std::vector<std::vector<int>> perfect_matchings(const ARGraph& g, uint64_t max_matchings = 5'000'000);

struct MatchingClass {
    IntMatrix cells;          // matched edges per cell minus one
    TriangularArray triangle;
    int exponent = 0;         // class size is 2^exponent
};

MatchingClass matching_class(const ARGraph& g, const std::vector<int>& matching);

ParamPoly edge_weight_poly(EdgeWeight w);

}  // namespace gogmagog
