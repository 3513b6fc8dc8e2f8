#include "gogmagog/triangles/asm.hpp"

#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <numeric>

namespace gogmagog {

bool is_asm(const IntMatrix& a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) return false;
    // partial sums along each row and column must stay in {0,1} and end at 1
    for (size_t i = 0; i < n; ++i) {
        int s = 0;
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j] < -1 || a[i][j] > 1) return false;
            s += a[i][j];
            if (s < 0 || s > 1) return false;
        }
        if (s != 1) return false;
    }
    for (size_t j = 0; j < n; ++j) {
        int s = 0;
        for (size_t i = 0; i < n; ++i) {
            s += a[i][j];
            if (s < 0 || s > 1) return false;
        }
        if (s != 1) return false;
    }
    return true;
}

AsmStats asm_statistics(const IntMatrix& a) {
    if (!is_asm(a)) throw PreconditionError("asm_statistics: not an alternating sign matrix");
    const int n = static_cast<int>(a.size());
    AsmStats s;
    for (const auto& row : a)
        for (int x : row)
            if (x == -1) ++s.minus_count;
    for (int i = 0; i < n; ++i)
        for (int ip = 0; ip < i; ++ip)
            for (int j = 0; j < n; ++j) {
                if (a[ip][j] == 0) continue;
                for (int jp = 0; jp <= j; ++jp) s.inv += a[ip][j] * a[i][jp];
                for (int jp = j; jp < n; ++jp) s.inv_prime += a[ip][j] * a[i][jp];
            }
    return s;
}

TriangularArray asm_to_monotone_triangle(const IntMatrix& a) {
    if (!is_asm(a)) throw PreconditionError("asm_to_monotone_triangle: not an ASM");
    const int n = static_cast<int>(a.size());
    TriangularArray t(n);
    std::vector<int> colsum(n, 0);
    for (int k = 1; k <= n; ++k) {
        for (int j = 0; j < n; ++j) colsum[j] += a[k - 1][j];
        int c = 1;
        for (int j = 0; j < n; ++j)
            if (colsum[j] == 1) t.set(k, c++, j + 1);
    }
    return t;
}

IntMatrix monotone_triangle_to_asm(const TriangularArray& m) {
    const int n = m.n;
    for (int j = 1; j <= n; ++j)
        if (!m.has(n, j) || m.at(n, j) != j) throw PreconditionError("monotone_triangle_to_asm: bottom row must be 1..n");
    if (!is_monotone_triangle(m)) throw PreconditionError("monotone_triangle_to_asm: not a monotone triangle");
    IntMatrix a(n, std::vector<int>(n, 0));
    std::vector<int> prev(n, 0);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> ind(n, 0);
        for (int j = 1; j <= k; ++j) ind[m.at(k, j) - 1] = 1;
        for (int c = 0; c < n; ++c) a[k - 1][c] = ind[c] - prev[c];
        prev = ind;
    }
    return a;
}

std::vector<IntMatrix> all_asms(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 1);
    std::vector<IntMatrix> out;
    enumerate_monotone_triangles(b, [&](const TriangularArray& t, const StatVector&) { out.push_back(monotone_triangle_to_asm(t)); });
    return out;
}

BigInt asm_count_formula(int n) {
    if (n < 0) throw PreconditionError("asm_count_formula: n must be non-negative");
    BigInt num(1), den(1);
    for (int j = 0; j < n; ++j) {
        num *= factorial(3 * j + 1);
        den *= factorial(n + j);
    }
    return num / den;
}

}  // namespace gogmagog
