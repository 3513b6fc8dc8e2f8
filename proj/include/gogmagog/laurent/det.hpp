#pragma once

#include "gogmagog/polyring/errors.hpp"

#include <cstdint>
#include <vector>

namespace gogmagog {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Determinant over any commutative ring: Laplace expansion along rows, memoized
// over column subsets (n * 2^n products). Exact for polynomials and integers.
template <class T>
T det_expand(const Matrix<T>& M) {
    const size_t n = M.size();
    for (const auto& row : M)
        if (row.size() != n) throw PreconditionError("det: matrix is not square");
    if (n == 0) return T(1);
    if (n > 20) throw ResourceError("det_expand: matrix too large");
    const T zero(0);
    std::vector<T> dp(size_t{1} << n, zero);
    std::vector<char> live(size_t{1} << n, 0);
    dp[0] = T(1);
    live[0] = 1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!live[mask]) continue;
        const int r = __builtin_popcount(mask);
        if (r == static_cast<int>(n)) continue;
        for (size_t c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            if (M[r][c] == zero) continue;
            // sign: columns already used to the right of c
            int above = __builtin_popcount(mask >> (c + 1));
            T term = M[r][c] * dp[mask];
            uint32_t nm = mask | (1u << c);
            if (above % 2)
                dp[nm] = dp[nm] - term;
            else
                dp[nm] = dp[nm] + term;
            live[nm] = 1;
        }
    }
    return dp[(size_t{1} << n) - 1];
}

// Gaussian elimination over a field whose elements support / and == T(0).
template <class T>
T det_gauss(Matrix<T> M) {
    const size_t n = M.size();
    for (const auto& row : M)
        if (row.size() != n) throw PreconditionError("det: matrix is not square");
    T d(1);
    const T zero(0);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && M[p][c] == zero) ++p;
        if (p == n) return zero;
        if (p != c) {
            std::swap(M[p], M[c]);
            d = zero - d;
        }
        d = d * M[c][c];
        T iv = T(1) / M[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == zero) continue;
            T f = M[r][c] * iv;
            for (size_t k = c; k < n; ++k) M[r][k] = M[r][k] - f * M[c][k];
        }
    }
    return d;
}

}  // namespace gogmagog
