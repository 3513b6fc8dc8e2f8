#include "gogmagog/matchings/ar_graph.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <doctest.h>

#include <map>

using namespace gogmagog;

namespace {

ParamPoly mt_at_v_one_minus_u(const std::vector<int>& b) {
    return mt_generating_function(b).substitute(param_slot(Param::v), ParamPoly(1) - ParamPoly::param(Param::u));
}

}  // namespace

TEST_CASE("single cell orientation") {
    // locks the NW/NE/SE/SW labelling and weights of one diamond
    auto g = ar_graph(1, 1, {1});
    REQUIRE(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 4);
    const char* names[] = {"NW", "NE", "SE", "SW"};
    const EdgeWeight weights[] = {EdgeWeight::one, EdgeWeight::one, EdgeWeight::u, EdgeWeight::one_minus_u};
    for (int e = 0; e < 4; ++e) {
        CHECK(g.edges[e].name == names[e]);
        CHECK(g.edges[e].weight == weights[e]);
        CHECK(g.edges[e].cell_r == 0);
        CHECK(g.edges[e].cell_c == 0);
    }
    const auto& top = g.vertices[g.edges[0].b];
    CHECK(top.kind == 'T');
    CHECK(top.r == 0);
    const auto& bottom = g.vertices[g.edges[2].b];
    CHECK(bottom.kind == 'T');
    CHECK(bottom.r == 1);
    auto s = weighted_matching_sum(g);
    CHECK(s.matchings == 2);
    CHECK(s.value == ParamPoly(1));
}

TEST_CASE("pendant edges sit below the columns missing from b") {
    auto g = ar_graph(1, 3, {2});
    int pendants = 0;
    for (const auto& e : g.edges)
        if (e.name == "pendant") {
            ++pendants;
            CHECK(e.cell_r == -1);
        }
    CHECK(pendants == 2);
}

TEST_CASE("weighted matchings reproduce monotone triangles at v = 1 - u") {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 2, 4}})
        for (int m = b.back(); m <= 4; ++m) CHECK(weighted_matching_sum(ar_graph(static_cast<int>(b.size()), m, b)).value == mt_at_v_one_minus_u(b));
}

TEST_CASE("matching classes have power-of-two sizes") {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
        auto g = ar_graph(2, 3, b);
        std::map<std::vector<int>, std::pair<int, int>> classes;
        for (const auto& M : perfect_matchings(g)) {
            auto c = matching_class(g, M);
            auto& x = classes[c.triangle.cells];
            ++x.first;
            x.second = c.exponent;
        }
        CHECK(classes.size() == enumerate_monotone_triangles(b, [](const TriangularArray&, const StatVector&) {}));
        for (const auto& [k, v] : classes) CHECK(v.first == (1 << v.second));
    }
}

TEST_CASE("matching preconditions and budgets") {
    CHECK_THROWS_AS(ar_graph(2, 3, {2, 2}), PreconditionError);
    CHECK_THROWS_AS(ar_graph(2, 3, {1, 4}), PreconditionError);
    CHECK_THROWS_AS(ar_graph(2, 3, {1}), PreconditionError);
    CHECK_THROWS_AS(weighted_matching_sum(ar_graph(3, 5, {1, 3, 5}), 3), ResourceError);
    CHECK(edge_weight_poly(EdgeWeight::one_minus_u) == ParamPoly(1) - ParamPoly::param(Param::u));
}
