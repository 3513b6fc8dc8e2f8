#include "gogmagog/polyring/eisenstein.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/polyring/integer.hpp"
#include "gogmagog/polyring/key.hpp"
#include "gogmagog/polyring/poly.hpp"

#include <doctest.h>

#include <random>

using namespace gogmagog;

namespace {

ParamPoly u() { return ParamPoly::param(Param::u); }
ParamPoly v() { return ParamPoly::param(Param::v); }

ParamPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(0, 3), c(-5, 5), len(0, 5);
    ParamPoly p;
    for (int t = len(rng); t > 0; --t) {
        Key k;
        k.set(param_slot(Param::u), e(rng));
        k.set(param_slot(Param::v), e(rng));
        k.set(var_slot(0), e(rng) - 1);
        p.add_term(k, BigInt(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("generalized binomial coefficients") {
    CHECK(gen_binom(5, 2) == 10);
    CHECK(gen_binom(-3, 2) == 6);
    CHECK(gen_binom(-1, 3) == -1);
    CHECK(gen_binom(2, 5) == 0);
    CHECK(gen_binom(7, -1) == 0);
    CHECK(gen_binom(0, 0) == 1);
    for (long n = -6; n <= 6; ++n)
        for (long k = 0; k <= 6; ++k) CHECK(binom_reflection_check(n, k));
}

TEST_CASE("factorial and sign helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(sign_pow(3) == -1);
    CHECK(sign_pow(-4) == 1);
}

TEST_CASE("polynomial arithmetic") {
    ParamPoly p = (ParamPoly(1) + u()).pow(3);
    CHECK(p.size() == 4);
    Key k;
    k.set(param_slot(Param::u), 2);
    CHECK(p.coeff(k) == 3);
    CHECK((u() - u()).is_zero());
    CHECK(to_string(u() * v() + ParamPoly(2)) == "2 + u*v");
    CHECK_THROWS_AS(u().pow(-1), PreconditionError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == ParamPoly());
    }
}

TEST_CASE("substitution and specialization") {
    ParamPoly p = u() * u() + v();
    CHECK(p.substitute(param_slot(Param::u), v()) == v() * v() + v());
    CHECK(specialize(p, Param::u, 3) == ParamPoly(9) + v());
    CHECK(evaluate_params(p, {{Param::u, BigRat(1, 2)}, {Param::v, BigRat(1, 4)}}) == BigRat(1, 2));
    // negative exponents need a monomial replacement
    ParamPoly x = ParamPoly::x(0, -1);
    CHECK(x.substitute(var_slot(0), ParamPoly::x(1, 2)) == ParamPoly::x(1, -2));
    CHECK_THROWS_AS(x.substitute(var_slot(0), ParamPoly::x(1) + ParamPoly(1)), PreconditionError);
}

TEST_CASE("rational to integer conversion") {
    RatPoly r = RatPoly::param(Param::u, 1, make_rat(4, 2));
    CHECK(to_integer(r) == u().scaled(BigInt(2)));
    CHECK_THROWS_AS(to_integer(RatPoly::param(Param::u, 1, BigRat(1, 2))), DomainError);
}

TEST_CASE("key exponent range") {
    Key k;
    CHECK_THROWS_AS(k.set(0, 200), ResourceError);
    CHECK_THROWS_AS(ParamPoly::x(kMaxVars), ResourceError);
    CHECK(param_slot_from_name("QR") == param_slot(Param::QR));
    CHECK(param_slot_from_name("nope") == -1);
}

TEST_CASE("sixth root of unity arithmetic") {
    const Eisenstein z = Eisenstein::zeta(), w = Eisenstein::omega();
    CHECK(z.pow(6) == Eisenstein(1));
    CHECK(z.pow(3) == Eisenstein(-1));
    CHECK(w * w + w + Eisenstein(1) == Eisenstein(0));
    CHECK(Eisenstein(1) + w == -(w * w));
    CHECK(z * z.conj() == Eisenstein(1));
    CHECK(z.inv() == z.pow(5));
    CHECK(z.pow(-2) == z.pow(4));
    CHECK_THROWS_AS(Eisenstein(2).inv(), DomainError);
    CHECK(to_field(Eisenstein(2)).inv() == EisensteinQ::from(BigRat(1, 2)));
    CHECK(eisenstein_arith(z, Eisenstein(6), EisOp::pow) == Eisenstein(1));
}
