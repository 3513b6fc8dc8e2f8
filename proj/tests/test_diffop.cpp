#include "gogmagog/diffop/operators.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <doctest.h>

#include <random>

using namespace gogmagog;

namespace {

MPoly X(int i, int e = 1) { return MPoly::x(i, e); }
MPoly U() { return MPoly::param(Param::u); }
MPoly V() { return MPoly::param(Param::v); }

MPoly sample_poly() { return X(0, 2).scaled(BigRat(3)) - X(0) * X(1) + X(1).scaled(BigRat(2)) + MPoly(1); }

BigRat power(long base, int e) {
    BigRat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// f(a, b) for f in x_1, x_2 with rational coefficients
BigRat eval2(const MPoly& f, long a, long b) {
    return f.evaluate<BigRat>([&](int s, int e) { return power(s == var_slot(0) ? a : b, e); }, [](const BigRat& c) { return c; });
}

}  // namespace

TEST_CASE("extended summation") {
    std::function<BigInt(long)> id = [](long i) { return BigInt(i); };
    CHECK(extended_sum<BigInt>(id, 1, 3) == 6);
    CHECK(extended_sum<BigInt>(id, 4, 3) == 0);
    CHECK(extended_sum<BigInt>(id, 5, 2) == -7);
    // additivity holds for every a, b, c
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                CHECK(extended_sum<BigInt>(id, a, b) + extended_sum<BigInt>(id, b + 1, c) == extended_sum<BigInt>(id, a, c));
}

TEST_CASE("shift and difference operators commute across variables") {
    MPoly f = sample_poly();
    CHECK(shift(forward_difference(f, 1), 0, 1) == forward_difference(shift(f, 0, 1), 1));
    CHECK(forward_difference(backward_difference(f, 0), 1) == backward_difference(forward_difference(f, 1), 0));
    CHECK(backward_difference(f, 0) == shift(forward_difference(f, 0), 0, -1));
    CHECK(shift(shift(f, 0, 2), 0, -2) == f);
}

TEST_CASE("differences of binomial polynomials") {
    for (int k = 1; k <= 5; ++k) CHECK(forward_difference(binomial_poly(X(0), k), 0) == binomial_poly(X(0), k - 1));
    CHECK(binomial_poly(X(0), 0) == MPoly(1));
}

TEST_CASE("strict operator evaluates the three shifted terms") {
    MPoly f = sample_poly();
    MPoly want = shift(f, 1, 1) * U() + shift(f, 0, -1) * V() + shift(shift(f, 0, -1), 1, 1) * (MPoly(1) - U() - V());
    CHECK(strict_op(f, 0, 1) == want);
}

TEST_CASE("strict operator encodes weighted strictly interlacing sums") {
    // sum over a in [l, b], a' in [b, r], a < a', of f(a,a') u^[a=b] v^[a'=b]
    // equals u F(b,b+1) + v F(b-1,b) + (1-u-v) F(b-1,b+1), F(y1,y2) = sum_{a=l}^{y1} sum_{a'=y2}^{r} f(a,a')
    MPoly f = sample_poly();
    for (long l = -1; l <= 2; ++l)
        for (long b = l + 1; b <= 3; ++b)
            for (long r = b + 1; r <= 5; ++r) {
                RatPoly lhs;
                for (long a = l; a <= b; ++a)
                    for (long ap = b; ap <= r; ++ap) {
                        if (a >= ap) continue;
                        RatPoly w = RatPoly::constant(eval2(f, a, ap));
                        if (a == b) w = w * U();
                        if (ap == b) w = w * V();
                        lhs += w;
                    }
                auto F = [&](long y1, long y2) {
                    std::function<BigRat(long)> outer = [&](long a) {
                        std::function<BigRat(long)> inner = [&](long ap) { return eval2(f, a, ap); };
                        return extended_sum<BigRat>(inner, y2, r);
                    };
                    return extended_sum<BigRat>(outer, l, y1);
                };
                RatPoly rhs = U().scaled(F(b, b + 1)) + V().scaled(F(b - 1, b)) + (MPoly(1) - U() - V()).scaled(F(b - 1, b + 1));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("inverse difference series invert their operators") {
    MPoly f = sample_poly() * X(0) + X(1, 3);
    MPoly g = inverse_forward_series(f, 0);
    CHECK(g + (MPoly(1) - V()) * forward_difference(g, 0) == f);
    MPoly h = inverse_backward_series(f, 1);
    CHECK(h + (U() - MPoly(1)) * backward_difference(h, 1) == f);
    MPoly d = v_forward_difference(f, 0);
    CHECK(d - (V() - MPoly(1)) * forward_difference(d, 0) == forward_difference(f, 0));
    MPoly e = u_backward_difference(f, 1);
    CHECK(e - (MPoly(1) - U()) * backward_difference(e, 1) == backward_difference(f, 1));
}

TEST_CASE("gelfand-tsetlin polynomial") {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1, 2, 3}, {0, 2, 5}, {1, 1, 4}, {2, 3, 3, 6}}) {
        ParamPoly v = evaluate_at(gt_polynomial(static_cast<int>(b.size())), b);
        CHECK(BigRat(v.constant_coeff()) == gt_count_formula(b));
    }
}

TEST_CASE("operator formula reproduces monotone triangles") {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1}, {1, 3}, {1, 2, 3}, {1, 3, 4}, {1, 2, 4, 6}})
        CHECK(mn_evaluate(b) == mt_generating_function(b));
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1, 1}, {1, 1, 3}, {2, 2, 2}, {1, 2, 2, 3}})
        CHECK(mn_evaluate_at_one(b) == enumerate_monotone_triangles(b, [](const TriangularArray&, const StatVector&) {}));
}

TEST_CASE("apex-restricted operator formulas") {
    const std::vector<int> b{1, 2, 4};
    auto by_top = mt_counts_by_top(b);
    std::map<int, uint64_t> gt_top;
    enumerate_gt_patterns(b, [&](const TriangularArray& t, const StatVector&) { ++gt_top[t.at(1, 1)]; });
    for (int a = 1; a <= 4; ++a) {
        CHECK(gt_top_restricted(a, 1, 4, b) == gt_top[a]);
        CHECK(specialize(specialize(mn_top_evaluate(a, 1, 4, b), Param::u, 1), Param::v, 1) == ParamPoly::constant(BigInt(by_top[a])));
    }
}

TEST_CASE("st-tree operator formula against enumeration") {
    STTreeShape sh{4, {1}, {1}};
    const std::vector<int> b{2, 3, 6, 7};
    for (const auto& I : std::vector<std::vector<int>>{{}, {1}})
        for (const auto& J : std::vector<std::vector<int>>{{}, {4}}) CHECK(st_operator_evaluate(sh, b, I, J) == st_tree_generating_function(sh, b, I, J));
    CHECK_THROWS_AS(st_operator_evaluate(sh, {1, 2, 3}), PreconditionError);
}
