#include "gogmagog/laurent/ct.hpp"
#include "gogmagog/laurent/det.hpp"
#include "gogmagog/laurent/symmetric.hpp"
#include "gogmagog/polyring/errors.hpp"

#include <doctest.h>

#include <random>

using namespace gogmagog;

namespace {

LaurentPoly X(int i, int e = 1) { return LaurentPoly::x(i, e); }

}  // namespace

TEST_CASE("constant term of a polynomial factor") {
    CTExpression e(1);
    e.mul(one_plus_x(0, 2)).mul(X(0, -1));
    CHECK(constant_term(e) == ParamPoly(2));
}

TEST_CASE("constant term with a geometric series") {
    // CT x^-3 / (1 - x) = 1 and CT x^-2 / (1 - x)^2 = 3
    CTExpression a(1);
    a.mul(X(0, -3)).geometric(X(0));
    CHECK(constant_term(a) == ParamPoly(1));
    CTExpression b(1);
    b.mul(X(0, -2)).geometric(X(0), 2);
    CHECK(constant_term(b) == ParamPoly(3));
    // (1 + x)^-1 x^-2 contributes (-1)^2
    CTExpression c(1);
    c.one_plus_x_pow(0, -1).mul(X(0, -2));
    CHECK(constant_term(c) == ParamPoly(1));
}

TEST_CASE("constant term in two variables with parameters") {
    // CT (1 + u x/y)(1 + y/x) = 1 + u
    CTExpression e(2);
    e.mul(LaurentPoly(1) + LaurentPoly::param(Param::u) * X(0) * X(1, -1));
    e.mul(LaurentPoly(1) + X(1) * X(0, -1));
    CHECK(constant_term(e) == ParamPoly(1) + ParamPoly::param(Param::u));
}

TEST_CASE("truncation bounds") {
    CTExpression e(2);
    e.mul(X(0, -3) * X(1, 1)).mul(X(1, -2));
    auto d = truncation_bounds(e);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 3);
    CHECK(d[1] == 1);
}

TEST_CASE("constant-term budgets") {
    CTExpression e(3);
    e.mul(X(0, -1) * X(1, -1) * X(2, -1)).geometric(X(0)).geometric(X(1)).geometric(X(2));
    CTBudget few_vars;
    few_vars.max_vars = 2;
    CHECK_THROWS_AS(constant_term(e, few_vars), ResourceError);
    CTBudget tiny_box;
    tiny_box.max_box_volume = 2;
    CHECK_THROWS_AS(constant_term(e, tiny_box), ResourceError);
    CHECK(constant_term(e) == ParamPoly(1));
}

TEST_CASE("antisymmetrization and the Vandermonde quotient") {
    const auto vars = iota_vars(3);
    auto a = antisymmetrize(X(1) * X(2, 2), vars);
    CHECK(a == vandermonde(vars));
    CHECK(divide_by_vandermonde(a, vars) == LaurentPoly(1));
    // a_{(2,1,0)+(1,0,0)} / V = s_{(1)} = x0 + x1 + x2
    auto b = antisymmetrize(X(1) * X(2, 3), vars);
    CHECK(divide_by_vandermonde(b, vars) == X(0) + X(1) + X(2));
    CHECK_THROWS_AS(divide_by_difference(X(0) + LaurentPoly(1), 0, 1), InexactDivision);
}

TEST_CASE("symmetric functions") {
    CHECK(complete_hom(2, {0, 1}) == X(0, 2) + X(0) * X(1) + X(1, 2));
    CHECK(complete_hom(1, {0, 1}, true) == X(0, -1) + X(1, -1));
    CHECK(elem_sym(2, {0, 1, 2}) == X(0) * X(1) + X(0) * X(2) + X(1) * X(2));
    CHECK(symmetrize(X(0), {0, 1}) == X(0) + X(1));
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    CHECK(permute_vars(X(0) * X(1, 2), {0, 1}, {1, 0}) == X(1) * X(0, 2));
}

TEST_CASE("determinants: expansion agrees with elimination") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            Matrix<BigRat> M(n, std::vector<BigRat>(n));
            Matrix<BigInt> Z(n, std::vector<BigInt>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) Z[i][j] = d(rng), M[i][j] = BigRat(Z[i][j]);
            CHECK(BigRat(det_expand(Z)) == det_gauss(M));
        }
    Matrix<LaurentPoly> V(3, std::vector<LaurentPoly>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) V[i][j] = X(i, j);
    CHECK(det_expand(V) == vandermonde({0, 1, 2}));
    CHECK_THROWS_AS(det_expand(Matrix<BigInt>{{1, 2}}), PreconditionError);
}
