#pragma once

#include "gogmagog/polyring/poly.hpp"
#include "gogmagog/triangles/sttree.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gogmagog {

// Polynomials in x_1..x_n (zero-based slots) with rational coefficients that may carry u, v.
using MPoly = RatPoly;

// Extended summation: ordinary sum for a <= b, 0 for b = a-1, and
// -(f(b+1) + ... + f(a-1)) for b+1 <= a-1.
template <class T>
T extended_sum(const std::function<T(long)>& f, long a, long b) {
    T acc(0);
    if (a <= b) {
        for (long i = a; i <= b; ++i) acc = acc + f(i);
    } else if (b + 1 <= a - 1) {
        for (long i = b + 1; i <= a - 1; ++i) acc = acc - f(i);
    }
    return acc;
}

// E_x^s : x_i -> x_i + s
MPoly shift(const MPoly& f, int i, long s);
MPoly forward_difference(const MPoly& f, int i);   // E - 1
MPoly backward_difference(const MPoly& f, int i);  // 1 - E^{-1}

// u E_y + v E_x^{-1} + (1-u-v) E_x^{-1} E_y
MPoly strict_op(const MPoly& f, int x, int y);

// Delta-bar[v] = sum_{i>=0} (v-1)^i Dbar^{i+1};  Delta-under[u] = sum_{i>=0} (1-u)^i Dund^{i+1}
MPoly v_forward_difference(const MPoly& f, int i);
MPoly u_backward_difference(const MPoly& f, int i);
// (1 + (1-v) Dbar)^{-1} and (1 + (u-1) Dund)^{-1} as finite sums on polynomials
MPoly inverse_forward_series(const MPoly& f, int i);
MPoly inverse_backward_series(const MPoly& f, int i);

// binomial polynomial C(X, k) with X a polynomial
MPoly binomial_poly(const MPoly& X, int k);

// GT_n(x) = prod_{i<j} (x_j - x_i + j - i)/(j - i); with a top restriction the
// signed-binomial determinant sum for patterns with apex a.
MPoly gt_polynomial(int n, const std::optional<TopRestriction>& top = std::nullopt);

// M_n(u,v,x) = prod_{p<q} Strict_{x_q,x_p} GT_n(x)
MPoly mn_polynomial(int n, const std::optional<TopRestriction>& top = std::nullopt);

// Evaluate all x slots at the given integers; result must be integral.
ParamPoly evaluate_at(const MPoly& f, const std::vector<int>& b);

ParamPoly mn_evaluate(const std::vector<int>& b);
// u = v = 1 specialisation, weakly increasing b allowed
BigInt mn_evaluate_at_one(const std::vector<int>& b);

BigInt gt_top_restricted(int a, int lo, int hi, const std::vector<int>& b);
ParamPoly mn_top_evaluate(int a, int lo, int hi, const std::vector<int>& b);

// Operator formula for (s,t)-trees with exception sets and optional apex restriction.
ParamPoly st_operator_evaluate(const STTreeShape& shape, const std::vector<int>& b, const std::vector<int>& I = {},
                               const std::vector<int>& J = {}, const std::optional<TopRestriction>& top = std::nullopt);

}  // namespace gogmagog
