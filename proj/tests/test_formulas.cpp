#include "gogmagog/formulas/constant_terms.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <doctest.h>

#include <map>

using namespace gogmagog;

namespace {

ParamPoly mono(std::initializer_list<std::pair<Param, int>> ps) {
    Key k;
    for (auto [p, e] : ps) k.add(param_slot(p), e);
    return ParamPoly::monomial(k, BigInt(1));
}

ParamPoly constant(uint64_t c) { return ParamPoly::constant(BigInt(static_cast<unsigned long>(c))); }

uint64_t count_mt(const std::vector<int>& b) {
    return enumerate_monotone_triangles(b, [](const TriangularArray&, const StatVector&) {});
}

}  // namespace

TEST_CASE("monotone triangle constant term") {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1}, {2, 5}, {1, 2, 3}, {1, 3, 6}, {1, 2, 3, 4}, {2, 3, 5, 6}})
        CHECK(ct_mt(b) == mt_generating_function(b));
    CHECK_THROWS_AS(ct_mt({1, 1, 2}), PreconditionError);
}

TEST_CASE("alternative and antisymmetrized monotone triangle counts") {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1, 2, 3}, {1, 1, 3}, {2, 2, 2}, {0, 1, 1}, {1, 2, 2, 4}}) {
        CHECK(ct_mt(b, MTMode::alternative) == constant(count_mt(b)));
        CHECK(ct_mt(b, MTMode::antisym) == constant(count_mt(b)));
    }
}

TEST_CASE("apex-restricted monotone triangles") {
    const std::vector<int> b{1, 3, 4};
    std::map<int, ParamPoly> by_top;
    enumerate_monotone_triangles(b, [&](const TriangularArray&, const StatVector& s) {
        by_top[s.top_entry] += mono({{Param::u, s.inv}, {Param::v, s.inv_prime}});
    });
    for (int a = 1; a <= 4; ++a) CHECK(ct_mt_top(b, a, 1, 4) == by_top[a]);
    CHECK_THROWS_AS(ct_mt_top(b, 5, 1, 4), PreconditionError);
    CHECK_THROWS_AS(ct_mt_top(b, 2, 2, 4), PreconditionError);
}

TEST_CASE("gog counts for ASMs") {
    const long want[] = {1, 2, 7, 42, 429};
    for (int n = 1; n <= 5; ++n) CHECK(gog_ct({0, n, n}) == ParamPoly(want[n - 1]));
}

TEST_CASE("gog trapezoids per bottom row, all weights") {
    for (int m = 0; m <= 1; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= n; ++k) {
                std::map<std::vector<int>, std::array<ParamPoly, 3>> per;
                ParamPoly total;
                enumerate_gog_trapezoids(m, n, k, std::nullopt, [&](const TriangularArray&, const StatVector& s) {
                    auto& a = per[s.bottom_row];
                    a[0] += ParamPoly(1);
                    a[1] += mono({{Param::u, s.inv}, {Param::v, s.inv_prime}});
                    a[2] += mono({{Param::P, s.minima}, {Param::Q, s.maxima - (s.bottom_right_is_max ? 1 : 0)}});
                    total += mono({{Param::P, s.minima}, {Param::Q, s.maxima}});
                });
                for (const auto& [b, v] : per) {
                    CHECK(gog_ct({m, n, k, b, WeightMode::count}) == v[0]);
                    CHECK(gog_ct({m, n, k, b, WeightMode::inv_pair}) == v[1]);
                    CHECK(gog_ct({m, n, k, b, WeightMode::min_max}) == v[2]);
                }
                CHECK(gog_ct({m, n, k, std::nullopt, WeightMode::min_max}) == total);
            }
}

TEST_CASE("gog apex restriction") {
    std::map<int, uint64_t> tops;
    enumerate_gog_trapezoids(1, 3, 2, std::nullopt, [&](const TriangularArray& t, const StatVector&) { ++tops[t.at(1, 1)]; });
    for (int a = 1; a <= 4; ++a) CHECK(gog_ct({1, 3, 2, std::nullopt, WeightMode::count, TopRestriction{a, 1, 4}}) == constant(tops[a]));
    CHECK_THROWS_AS(gog_ct({1, 3, 2, std::nullopt, WeightMode::count, TopRestriction{2, 2, 4}}), PreconditionError);
}

TEST_CASE("gog pentagons, all weights") {
    for (int m = 0; m <= 1; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int kL = 1; kL <= n; ++kL)
                for (int kR = n + 1 - kL; kR <= n; ++kR) {
                    std::map<std::vector<int>, std::array<ParamPoly, 4>> per;
                    enumerate_gog_pentagons(m, n, kL, kR, [&](const TriangularArray&, const StatVector& s) {
                        auto& a = per[s.bottom_row];
                        const int bl = s.bottom_left_is_min, br = s.bottom_right_is_max;
                        a[0] += ParamPoly(1);
                        a[1] += mono({{Param::u, s.inv}, {Param::v, s.inv_prime}});
                        a[2] += mono({{Param::QL, s.bottom_minima - bl}, {Param::QR, s.bottom_maxima - br}});
                        if (s.top_minima >= 1 && s.top_maxima >= 1)
                            a[3] += mono({{Param::PL, s.top_minima},
                                          {Param::PR, s.top_maxima},
                                          {Param::QL, s.bottom_minima - bl},
                                          {Param::QR, s.bottom_maxima - br}});
                    });
                    for (const auto& [b, v] : per) {
                        CHECK(pentagon_ct({m, n, kL, kR, b, WeightMode::count}) == v[0]);
                        CHECK(pentagon_ct({m, n, kL, kR, b, WeightMode::inv_pair}) == v[1]);
                        CHECK(pentagon_ct({m, n, kL, kR, b, WeightMode::min_max}) == v[2]);
                        CHECK(pentagon_ct({m, n, kL, kR, b, WeightMode::top_min_max}) == v[3]);
                    }
                    CHECK(pentagon_bottom_rows(m, n, kL, kR).size() >= per.size());
                }
}

TEST_CASE("st-tree constant term against enumeration") {
    const std::vector<STTreeShape> shapes = {{3, {1}, {}}, {3, {}, {1}}, {4, {1}, {1}}, {4, {2, 1}, {}}};
    for (const auto& sh : shapes) {
        std::vector<int> b;
        for (int i = 1; i <= sh.n; ++i) b.push_back(2 * i - 1 + (i % 2));
        CHECK(ct_st_tree(sh, b) == st_tree_generating_function(sh, b));
        CHECK(ct_st_tree(sh, b, {1}, {sh.n}) == st_tree_generating_function(sh, b, {1}, {sh.n}));
    }
}

TEST_CASE("constant-term budget is enforced") {
    CTBudget tight;
    tight.max_vars = 3;
    CHECK_THROWS_AS(ct_mt({1, 2, 3, 4}, MTMode::standard, tight), ResourceError);
    CHECK_THROWS_AS(gog_ct({0, 4, 4}, tight), ResourceError);
}
