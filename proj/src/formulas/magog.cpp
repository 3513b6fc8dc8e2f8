#include "gogmagog/formulas/magog.hpp"

#include "builders.hpp"
#include "gogmagog/laurent/det.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <functional>
#include <numeric>
#include <string>

namespace gogmagog {

using namespace detail;

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw PreconditionError(msg);
}

void check_magog(int m, int n, int k) {
    require(m >= 0, "Magog: m must be non-negative");
    require(n >= 1 && 1 <= k && k <= n, "Magog: need 1 <= k <= n");
}

void check_magog_bottom(int m, int n, int k, const std::vector<int>& b) {
    require(static_cast<int>(b.size()) == k, "Magog: bottom row must have k entries");
    for (int idx = 0; idx < k; ++idx) {
        int j = n - k + 1 + idx;
        require(b[idx] >= 1 && b[idx] <= m + j, "Magog: bottom entry in column j must lie in [1, m+j]");
        require(idx == 0 || b[idx - 1] <= b[idx], "Magog: bottom row must be weakly increasing");
    }
}

ParamPoly gbp(long n, long k) { return ParamPoly::constant(gen_binom(n, k)); }

long binom2(long n) { return n * (n - 1) / 2; }

long sum_of(const std::vector<int>& b) { return std::accumulate(b.begin(), b.end(), 0L); }

// x - P' - P' x
LaurentPoly x_minus(int i, Param p) { return mono(1, {{i, 1}}) - par(p) - mono(1, {{i, 1}}, {{p, 1}}); }

// (1 - x_i x_j)^(-1)
void add_pair_series(CTExpression& e, int i, int j) { e.geometric(mono(1, {{i, 1}, {j, 1}}), 1); }

}  // namespace

ParamPoly magog_lgv_det(int m, int n, int k, const std::vector<int>& b) {
    check_magog(m, n, k);
    check_magog_bottom(m, n, k, b);
    const ParamPoly P = par(Param::P), Q = par(Param::Q);
    Matrix<ParamPoly> M(n, std::vector<ParamPoly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i <= n - k) {
                long N = j + k + m - 3;
                M[i - 1][j - 1] = gbp(N, 2 * j + m - i - 3) + (P + Q) * gbp(N, 2 * j + m - i - 2) + P * Q * gbp(N, 2 * j + m - i - 1);
            } else {
                long bi = b[i - (n - k) - 1];
                long N = j + m + n - bi - i - 1;
                M[i - 1][j - 1] = gbp(N, 2 * j + m - bi - i - 1) + P * gbp(N, 2 * j + m - bi - i);
            }
        }
    return det_expand(M);
}

ParamPoly magog_lgv_reflected(int m, int n, int k, const std::vector<int>& b) {
    check_magog(m, n, k);
    check_magog_bottom(m, n, k, b);
    const ParamPoly P = par(Param::P), Q = par(Param::Q);
    Matrix<ParamPoly> M(n, std::vector<ParamPoly>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i <= n - k) {
                M[i - 1][j - 1] = gbp(j - i - k - 1, 2 * j + m - i - 3) - (P + Q) * gbp(j - i - k, 2 * j + m - i - 2) +
                                  P * Q * gbp(j - i - k + 1, 2 * j + m - i - 1);
            } else {
                long bi = b[i - (n - k) - 1];
                M[i - 1][j - 1] = gbp(j - n - 1, 2 * j + m - bi - i - 1) - P * gbp(j - n, 2 * j + m - bi - i);
            }
        }
    int s = sign_pow((m - 1L) * n + binom2(n + 1) + sum_of(b));
    return det_expand(M).scaled(BigInt(s));
}

bool magog_v2_excluded(int m, int k, int q) { return k == 1 && m + q == 1; }

ParamPoly magog_slice_via_lgv(int m, int n, int k, int q) {
    check_magog(m, n, k);
    require(q >= 0, "magog_slice_via_lgv: q must be non-negative");
    ParamPoly total;
    for (const auto& b : magog_bottom_rows(m, n, k)) {
        const int want = q - (b.front() == 1 ? 1 : 0);
        if (want < 0) continue;
        const ParamPoly lgv = magog_lgv_det(m, n, k, b);
        for (const auto& [key, c] : lgv.terms()) {
            if (key[param_slot(Param::Q)] != want) continue;
            Key kk = key;
            kk.set(param_slot(Param::Q), 0);
            total.add_term(kk, c);
        }
    }
    return total;
}

namespace {

ParamPoly magog_v1_bottom(int m, int n, int k, const std::vector<int>& b, const CTBudget& budget) {
    CTExpression e(n);
    e.mul(LaurentPoly(sign_pow((m - 1L) * n + binom2(n + 1) + sum_of(b))));
    for (int i = 1; i <= n - k; ++i) {
        e.one_plus_x_pow(i - 1, -i - k);
        e.mul(xpow(i - 1, -m - 2 * n + i + 1));
        e.mul(x_minus(i - 1, Param::P));
        e.mul(x_minus(i - 1, Param::Q));
    }
    for (int i = n - k + 1; i <= n; ++i) {
        int bi = b[i - (n - k) - 1];
        e.one_plus_x_pow(i - 1, -n);
        e.mul(xpow(i - 1, -m - 2 * n + bi + i));
        e.mul(x_minus(i - 1, Param::P));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            e.mul(xpow(i, 1) - xpow(j, 1));
            e.mul(mono(1, {{i, 1}}) + mono(1, {{j, 1}}) + mono(1, {{i, 1}, {j, 1}}));
        }
    return constant_term(e, budget);
}

ParamPoly magog_v1_total(int m, int n, int k, const CTBudget& budget) {
    CTExpression e(n);
    e.mul(LaurentPoly(sign_pow((m - 1L) * n + binom2(n + 1))));
    const int c = n - k;  // x_{n-k+1}
    // (-1)^k Q (1 + x_c^-1) prod_{j > c} (x_j^-1 - x_c) + 1
    LaurentPoly t = (par(Param::Q) * (mono(1, {}) + xpow(c, -1))).scaled(BigInt(sign_pow(k)));
    for (int j = c + 1; j < n; ++j) t = t * (xpow(j, -1) - xpow(c, 1));
    e.mul(t + LaurentPoly(1));
    for (int i = 1; i <= n - k; ++i) {
        e.one_plus_x_pow(i - 1, -i - k);
        e.mul(xpow(i - 1, -m - 2 * n + i + 1));
        e.mul(x_minus(i - 1, Param::P));
        e.mul(x_minus(i - 1, Param::Q));
    }
    for (int i = n - k + 1; i <= n; ++i) {
        e.one_plus_x_pow(i - 1, -n - 1);
        e.mul(xpow(i - 1, -m - 2 * n + i + 2));
        e.mul(x_minus(i - 1, Param::P));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            e.mul(xpow(i, 1) - xpow(j, 1));
            e.mul(mono(1, {{i, 1}}) + mono(1, {{j, 1}}) + mono(1, {{i, 1}, {j, 1}}));
        }
    for (int i = n - k; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add_pair_series(e, i, j);
    return constant_term(e, budget);
}

// Second version in m+n-1 variables. excl = l removes x_l from the antisymmetric part
// (the (x_j - x_i) denominators of the q <= n-k summands, cancelled symbolically).
CTExpression magog_v2_expression(int m, int n, int k, int q, int excl) {
    const int N = m + n - 1;
    CTExpression e(N);
    if (m == 0) e.mul(par(Param::P));
    for (int i = 1; i <= N; ++i) {
        const bool weighted = i >= std::max(m, 1);
        int ex = n + (weighted ? m - i - 1 : 0);
        if (excl == i) ex += k + q - n - 1;
        e.one_plus_x_pow(i - 1, ex);
        e.mul(xpow(i - 1, -i - k + 2));
        if (weighted) e.mul(mono(1, {}) + mono(1, {{i - 1, 1}}, {{Param::P, 1}}));
        if (excl != i) e.geometric(xpow(i - 1, 1), 1);
    }
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
            if (excl == a || excl == b) continue;
            e.mul(xpow(b - 1, 1) - xpow(a - 1, 1));
            add_pair_series(e, a - 1, b - 1);
        }
    return e;
}

ParamPoly magog_v2_ct(int m, int n, int k, int q, const CTBudget& budget) {
    const int N = m + n - 1;
    if (N == 0) {
        ParamPoly r = q == n - k + 1 ? ParamPoly(1) : ParamPoly();
        return m == 0 ? r * par(Param::P) : r;
    }
    if (q == n - k + 1) return constant_term(magog_v2_expression(m, n, k, q, 0), budget);
    ParamPoly total;
    for (int l = 1; l <= k + m + q - 2; ++l)
        total += constant_term(magog_v2_expression(m, n, k, q, l), budget).scaled(BigInt(sign_pow(l - 1)));
    return total;
}

}  // namespace

ParamPoly magog_ct(const MagogCTSpec& spec, const CTBudget& budget) {
    const int m = spec.m, n = spec.n, k = spec.k;
    check_magog(m, n, k);
    switch (spec.version) {
        case MagogVersion::v1_bottom:
            require(spec.bottom.has_value(), "magog_ct: v1_bottom needs a bottom row");
            check_magog_bottom(m, n, k, *spec.bottom);
            return magog_v1_bottom(m, n, k, *spec.bottom, budget);
        case MagogVersion::v1_total: return magog_v1_total(m, n, k, budget);
        case MagogVersion::v2:
            require(spec.q >= 1 && spec.q <= n - k + 1, "magog_ct: v2 needs 1 <= q <= n-k+1");
            if (magog_v2_excluded(m, k, spec.q))
                throw NotApplicable("magog_ct: v2 excludes k = 1 with m + q = 1; use magog_lgv_det or enumeration");
            return magog_v2_ct(m, n, k, spec.q, budget);
    }
    return {};
}

ParamPoly magog_v2_det(int m, int n, int k, int q) {
    check_magog(m, n, k);
    require(q >= 1 && q <= n - k + 1, "magog_v2_det: need 1 <= q <= n-k+1");
    if (magog_v2_excluded(m, k, q))
        throw NotApplicable("magog_v2_det: the determinant excludes k = 1 with m + q = 1; use magog_lgv_det or enumeration");
    const int N = m + n - 1;
    const ParamPoly P = par(Param::P);
    const ParamPoly factor = m == 0 ? P : ParamPoly(1);
    if (N == 0) return q == n - k + 1 ? factor : ParamPoly();
    const bool split = q <= n - k;
    const int free_cols = split ? N - 1 : N;
    // column parameters: subsets of {2, ..., m+n+k-1}
    std::vector<int> pool;
    for (int v = 2; v < m + n + k; ++v) pool.push_back(v);
    ParamPoly total;
    std::vector<int> cols;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cols.size()) == free_cols) {
            Matrix<ParamPoly> M(N, std::vector<ParamPoly>(N));
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    ParamPoly v;
                    if (split && j == 1) {
                        if (i <= m - 1)
                            v = gbp(k + q - 1, k + i - 2);
                        else if (i <= k + m + q - 2)
                            v = P * gbp(k + m + q - i - 2, k + i - 3) + gbp(k + m + q - i - 2, k + i - 2);
                    } else {
                        long bj = cols[split ? j - 2 : j - 1];
                        if (i <= m - 1)
                            v = gbp(n, i + k - bj);
                        else
                            v = P * gbp(m + n - i - 1, i + k - bj - 1) + gbp(m + n - i - 1, i + k - bj);
                    }
                    M[i - 1][j - 1] = v;
                }
            total += det_expand(M);
            return;
        }
        for (size_t t = start; t < pool.size(); ++t) {
            cols.push_back(pool[t]);
            rec(t + 1);
            cols.pop_back();
        }
    };
    rec(0);
    return total * factor;
}

}  // namespace gogmagog
