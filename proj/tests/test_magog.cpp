#include "gogmagog/formulas/magog.hpp"
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

struct Brute {
    std::map<std::vector<int>, ParamPoly> per_bottom;
    std::map<int, ParamPoly> slices;
    ParamPoly total;
};

Brute brute(int m, int n, int k) {
    Brute r;
    enumerate_magog_trapezoids(m, n, k, [&](const TriangularArray&, const StatVector& s) {
        r.per_bottom[s.bottom_row] += mono({{Param::P, s.maxima}, {Param::Q, s.minima - (s.bottom_row[0] == 1 ? 1 : 0)}});
        r.total += mono({{Param::P, s.maxima}, {Param::Q, s.minima}});
        r.slices[s.minima] += mono({{Param::P, s.maxima}});
    });
    return r;
}

}  // namespace

TEST_CASE("magog per-bottom-row routes agree with enumeration") {
    for (int m = 0; m <= 1; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= n; ++k) {
                auto b = brute(m, n, k);
                CHECK(b.per_bottom.size() == magog_bottom_rows(m, n, k).size());
                for (const auto& [row, v] : b.per_bottom) {
                    CHECK(magog_lgv_det(m, n, k, row) == v);
                    CHECK(magog_lgv_reflected(m, n, k, row) == v);
                    CHECK(magog_ct({m, n, k, MagogVersion::v1_bottom, row}) == v);
                }
                CHECK(magog_ct({m, n, k, MagogVersion::v1_total}) == b.total);
            }
}

TEST_CASE("magog minima slices") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= n; ++k) {
                auto b = brute(m, n, k);
                for (int q = 1; q <= n - k + 1; ++q) {
                    if (magog_v2_excluded(m, k, q)) {
                        CHECK_THROWS_AS(magog_ct({m, n, k, MagogVersion::v2, std::nullopt, q}), NotApplicable);
                        CHECK_THROWS_AS(magog_v2_det(m, n, k, q), NotApplicable);
                        continue;
                    }
                    CHECK(magog_ct({m, n, k, MagogVersion::v2, std::nullopt, q}) == b.slices[q]);
                    CHECK(magog_v2_det(m, n, k, q) == b.slices[q]);
                }
                for (int q = 0; q <= n + 1; ++q) CHECK(magog_slice_via_lgv(m, n, k, q) == b.slices[q]);
            }
}

TEST_CASE("magog slice with three minima at m = 0") {
    // (0,3,2), q = 1 equals the enumerated slice
    auto b = brute(0, 3, 2);
    CHECK(magog_ct({0, 3, 2, MagogVersion::v2, std::nullopt, 1}) == b.slices[1]);
    CHECK_FALSE(b.slices[1].is_zero());
}

TEST_CASE("magog preconditions") {
    CHECK_THROWS_AS(magog_lgv_det(1, 3, 2, {3, 1}), PreconditionError);
    CHECK_THROWS_AS(magog_lgv_det(1, 3, 2, {1}), PreconditionError);
    CHECK_THROWS_AS(magog_ct({0, 3, 4}), PreconditionError);
    CHECK_THROWS_AS(magog_ct({0, 3, 2, MagogVersion::v1_bottom}), PreconditionError);
    CHECK_THROWS_AS(magog_ct({0, 3, 2, MagogVersion::v2, std::nullopt, 3}), PreconditionError);
    CHECK(magog_v2_excluded(0, 1, 1));
    CHECK(magog_v2_excluded(1, 1, 0));
    CHECK_FALSE(magog_v2_excluded(0, 2, 1));
}
