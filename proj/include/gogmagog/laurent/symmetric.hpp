#pragma once

#include "gogmagog/laurent/ct.hpp"

#include <vector>

namespace gogmagog {

// p with x_{vars[k]} replaced by x_{vars[perm[k]]} for every k.
LaurentPoly permute_vars(const LaurentPoly& p, const std::vector<int>& vars, const std::vector<int>& perm);

// sum over permutations sigma of vars of sgn(sigma) * sigma(p).
LaurentPoly antisymmetrize(const LaurentPoly& p, const std::vector<int>& vars, int factorial_budget = 8);
LaurentPoly symmetrize(const LaurentPoly& p, const std::vector<int>& vars, int factorial_budget = 8);

int permutation_sign(const std::vector<int>& perm);

// e_q(x_{vars}) and h_b(x_{vars}) or h_b(x_{vars}^{-1}).
LaurentPoly elem_sym(int q, const std::vector<int>& vars);
LaurentPoly complete_hom(int b, const std::vector<int>& vars, bool inverted = false);

// prod_{i<j} (x_{vars[j]} - x_{vars[i]})
LaurentPoly vandermonde(const std::vector<int>& vars);

// Exact quotient p / (x_a - x_b); throws InexactDivision on a remainder.
// p must have no negative exponent in x_a.
LaurentPoly divide_by_difference(const LaurentPoly& p, int a, int b);

// Exact quotient p / prod_{i<j}(x_{vars[j]} - x_{vars[i]}) by iterated synthetic division.
LaurentPoly divide_by_vandermonde(const LaurentPoly& p, const std::vector<int>& vars);

// Range 0..n-1.
std::vector<int> iota_vars(int n, int first = 0);

}  // namespace gogmagog
