#include "gogmagog/matchings/ar_graph.hpp"

#include "gogmagog/polyring/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gogmagog {

namespace {

int vertex_id(ARGraph& g, ARVertex v) {
    auto it = std::find(g.vertices.begin(), g.vertices.end(), v);
    if (it != g.vertices.end()) return static_cast<int>(it - g.vertices.begin());
    g.vertices.push_back(v);
    return static_cast<int>(g.vertices.size()) - 1;
}

struct Adjacency {
    std::vector<std::vector<int>> inc;  // vertex -> incident edges
    explicit Adjacency(const ARGraph& g) : inc(g.vertices.size()) {
        for (size_t e = 0; e < g.edges.size(); ++e) {
            inc[g.edges[e].a].push_back(static_cast<int>(e));
            inc[g.edges[e].b].push_back(static_cast<int>(e));
        }
    }
};

// Backtracking over the lowest uncovered vertex; calls leaf(chosen edges).
void for_each_matching(const ARGraph& g, uint64_t cap, const std::function<void(const std::vector<int>&)>& leaf) {
    const Adjacency adj(g);
    const size_t nv = g.vertices.size();
    std::vector<char> covered(nv, 0);
    std::vector<int> chosen;
    uint64_t found = 0;
    std::function<void(size_t)> rec = [&](size_t from) {
        size_t v = from;
        while (v < nv && covered[v]) ++v;
        if (v == nv) {
            if (++found > cap) throw ResourceError("perfect matchings: enumeration budget exceeded");
            leaf(chosen);
            return;
        }
        covered[v] = 1;
        for (int e : adj.inc[v]) {
            const auto& ed = g.edges[e];
            size_t o = ed.a == static_cast<int>(v) ? ed.b : ed.a;
            if (covered[o]) continue;
            covered[o] = 1;
            chosen.push_back(e);
            rec(v + 1);
            chosen.pop_back();
            covered[o] = 0;
        }
        covered[v] = 0;
    };
    rec(0);
}

}  // namespace

ARGraph ar_graph(int n, int m, const std::vector<int>& b) {
    if (n < 1 || m < 1) throw PreconditionError("ar_graph: need n, m >= 1");
    if (static_cast<int>(b.size()) != n) throw PreconditionError("ar_graph: b must have n entries");
    for (int i = 0; i < n; ++i) {
        if (b[i] < 1 || b[i] > m) throw PreconditionError("ar_graph: entries of b must lie in [1, m]");
        if (i > 0 && b[i - 1] >= b[i]) throw PreconditionError("ar_graph: b must be strictly increasing");
    }
    ARGraph g;
    g.n = n;
    g.m = m;
    g.b = b;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            int top = vertex_id(g, {'T', r, c}), bot = vertex_id(g, {'T', r + 1, c});
            int left = vertex_id(g, {'S', r, c}), right = vertex_id(g, {'S', r, c + 1});
            g.edges.push_back({left, top, EdgeWeight::one, r, c, "NW"});
            g.edges.push_back({top, right, EdgeWeight::one, r, c, "NE"});
            g.edges.push_back({right, bot, EdgeWeight::u, r, c, "SE"});
            g.edges.push_back({bot, left, EdgeWeight::one_minus_u, r, c, "SW"});
        }
    for (int c = 0; c < m; ++c)
        if (std::find(b.begin(), b.end(), c + 1) == b.end()) {
            int bot = vertex_id(g, {'T', n, c}), end = vertex_id(g, {'P', n + 1, c});
            g.edges.push_back({bot, end, EdgeWeight::one, -1, -1, "pendant"});
        }
    return g;
}

ParamPoly edge_weight_poly(EdgeWeight w) {
    switch (w) {
        case EdgeWeight::one: return ParamPoly(1);
        case EdgeWeight::u: return ParamPoly::param(Param::u);
        case EdgeWeight::one_minus_u: return ParamPoly(1) - ParamPoly::param(Param::u);
    }
    return ParamPoly(1);
}

MatchingSum weighted_matching_sum(const ARGraph& g, uint64_t max_matchings) {
    MatchingSum s;
    if (g.vertices.size() % 2) {
        s.odd_vertex_count = true;
        return s;
    }
    // tally by (#u edges, #(1-u) edges)
    std::map<std::pair<int, int>, uint64_t> tally;
    for_each_matching(g, max_matchings, [&](const std::vector<int>& chosen) {
        int a = 0, b = 0;
        for (int e : chosen) {
            if (g.edges[e].weight == EdgeWeight::u) ++a;
            if (g.edges[e].weight == EdgeWeight::one_minus_u) ++b;
        }
        ++tally[{a, b}];
        ++s.matchings;
    });
    const ParamPoly u = ParamPoly::param(Param::u), omu = ParamPoly(1) - u;
    for (const auto& [e, c] : tally) s.value += (u.pow(e.first) * omu.pow(e.second)).scaled(BigInt(static_cast<unsigned long>(c)));
    return s;
}

std::vector<std::vector<int>> perfect_matchings(const ARGraph& g, uint64_t max_matchings) {
    std::vector<std::vector<int>> out;
    if (g.vertices.size() % 2) return out;
    for_each_matching(g, max_matchings, [&](const std::vector<int>& chosen) {
        out.push_back(chosen);
        std::sort(out.back().begin(), out.back().end());
    });
    return out;
}

MatchingClass matching_class(const ARGraph& g, const std::vector<int>& matching) {
    MatchingClass mc;
    mc.cells.assign(g.n, std::vector<int>(g.m, -1));
    for (int e : matching) {
        if (e < 0 || e >= static_cast<int>(g.edges.size())) throw PreconditionError("matching_class: edge index out of range");
        const auto& ed = g.edges[e];
        if (ed.cell_r >= 0) ++mc.cells[ed.cell_r][ed.cell_c];
    }
    mc.triangle = TriangularArray(g.n);
    std::vector<int> colsum(g.m, 0);
    for (int k = 0; k < g.n; ++k) {
        std::vector<int> row;
        for (int j = 0; j < g.m; ++j) {
            colsum[j] += mc.cells[k][j];
            if (colsum[j] == 1) row.push_back(j + 1);
        }
        if (static_cast<int>(row.size()) != k + 1) throw PreconditionError("matching_class: not a perfect matching of the graph");
        for (int j = 0; j <= k; ++j) mc.triangle.set(k + 1, j + 1, row[j]);
    }
    for (const auto& row : mc.cells)
        for (int x : row)
            if (x == 1) ++mc.exponent;
    return mc;
}

}  // namespace gogmagog
