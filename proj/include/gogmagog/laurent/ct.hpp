#pragma once

#include "gogmagog/polyring/poly.hpp"

#include <cstdint>
#include <vector>

namespace gogmagog {

using LaurentPoly = IntPoly;

// (1 - base)^(-exponent), expanded as sum_j C(exponent+j-1, j) base^j.
// Every term of base must have non-negative x exponents and positive x-degree.
// (1 + x)^(-e) is the case base = -x.
struct SeriesFactor {
    LaurentPoly base;
    int exponent = 1;
};

struct CTExpression {
    int nvars = 0;
    std::vector<LaurentPoly> factors;
    std::vector<SeriesFactor> series;

    CTExpression() = default;
    explicit CTExpression(int n) : nvars(n) {}

    CTExpression& mul(LaurentPoly f) {
        factors.push_back(std::move(f));
        return *this;
    }
    CTExpression& geometric(LaurentPoly base, int exponent = 1) {
        if (exponent > 0) series.push_back({std::move(base), exponent});
        return *this;
    }
    // (1 + x_i)^e for any integer e; negative e becomes a series factor.
    CTExpression& one_plus_x_pow(int i, int e);
};

struct CTBudget {
    int max_vars = 12;
    uint64_t max_box_volume = 100'000'000;  // product of (D_v + 1) over variables
    size_t max_terms = 20'000'000;          // live terms in the running product
};

// Coefficient of x^0 (all of x_1..x_nvars) in the expanded product, as a parameter polynomial.
ParamPoly constant_term(const CTExpression& e, const CTBudget& budget = {});

// Per-variable truncation bounds D_v = max(0, -sum over factors of min exponent of x_v).
std::vector<int> truncation_bounds(const CTExpression& e);

// Helpers for building factors.
LaurentPoly one_plus_x(int i, int e = 1);  // (1 + x_i)^e, e >= 0
LaurentPoly linear(std::initializer_list<std::pair<long, Key>> terms);

}  // namespace gogmagog
