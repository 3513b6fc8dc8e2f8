#pragma once

#include "gogmagog/polyring/integer.hpp"
#include "gogmagog/triangles/array.hpp"

#include <vector>

namespace gogmagog {

using IntMatrix = std::vector<std::vector<int>>;

bool is_asm(const IntMatrix& a);

struct AsmStats {
    int inv = 0;
    int inv_prime = 0;
    int minus_count = 0;
};

// inv(A) = sum_{i'<i, j'<=j} a_{i',j} a_{i,j'}, inv'(A) = sum_{i'<i, j<=j'} a_{i',j} a_{i,j'}.
// Throws PreconditionError for a non-ASM.
AsmStats asm_statistics(const IntMatrix& a);

// Row k of the triangle lists the columns whose partial column sum over rows 1..k is 1.
TriangularArray asm_to_monotone_triangle(const IntMatrix& a);
// Inverse; the triangle must have bottom row 1..n and strictly increasing rows.
IntMatrix monotone_triangle_to_asm(const TriangularArray& m);

std::vector<IntMatrix> all_asms(int n);

// prod_{j=0}^{n-1} (3j+1)!/(n+j)!
BigInt asm_count_formula(int n);

}  // namespace gogmagog
