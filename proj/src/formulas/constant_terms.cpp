#include "gogmagog/formulas/constant_terms.hpp"

#include "builders.hpp"
#include "gogmagog/laurent/symmetric.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace gogmagog {

using namespace detail;

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw PreconditionError(msg);
}

bool strictly_increasing(const std::vector<int>& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] >= b[i]) return false;
    return true;
}

bool weakly_increasing(const std::vector<int>& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] > b[i]) return false;
    return true;
}

// sum_beta (-1)^(a+lo+beta) C(beta, a-lo) CT[base * h_beta(x^-1)]
ParamPoly apex_restricted(const CTExpression& base, int a, int lo, int hi, const CTBudget& budget) {
    ParamPoly total;
    auto vars = iota_vars(base.nvars);
    for (int beta = 0; beta <= hi - lo; ++beta) {
        BigInt c = gen_binom(beta, a - lo);
        if (c == 0) continue;
        CTExpression e = base;
        e.mul(complete_hom(beta, vars, true));
        total += constant_term(e, budget).scaled(c * sign_pow(a + lo + beta));
    }
    return total;
}

void check_top(const TopRestriction& t, int bmin, int bmax) {
    require(t.lo <= t.a && t.a <= t.hi, "apex restriction needs lo <= a <= hi");
    require(t.lo <= bmin && bmax <= t.hi, "apex restriction needs lo <= b_1 and b_n <= hi");
}

}  // namespace

ParamPoly ct_mt(const std::vector<int>& b, MTMode mode, const CTBudget& budget) {
    const int n = static_cast<int>(b.size());
    require(n >= 1, "ct_mt: empty bottom row");
    if (mode == MTMode::standard) {
        require(strictly_increasing(b), "ct_mt: standard mode needs a strictly increasing bottom row");
        CTExpression e(n);
        for (int i = 0; i < n; ++i) {
            e.one_plus_x_pow(i, b[i]);
            e.mul(xpow(i, -n + 1));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.mul(pair_uv(i, j));
        return constant_term(e, budget);
    }
    require(weakly_increasing(b), "ct_mt: bottom row must be weakly increasing");
    for (int x : b) require(x >= 0, "ct_mt: alternative forms need non-negative entries");
    if (mode == MTMode::alternative) {
        CTExpression e(n);
        for (int i = 0; i < n; ++i) {
            e.mul(xpow(i, -n + 1 - b[i]));
            e.geometric(xpow(i, 1), n);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                e.mul(xpow(j, 1) - xpow(i, 1));
                e.mul(mono(1, {}) - mono(1, {{j, 1}}) + mono(1, {{i, 1}, {j, 1}}));
            }
        return constant_term(e, budget);
    }
    // antisymmetrizer form: AS[prod (1+x_i)^b_i prod_{i<j} (1 + x_j + x_i x_j)] / Vandermonde at x = 0
    LaurentPoly f(1);
    for (int i = 0; i < n; ++i) f *= one_plus_x(i, b[i]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f *= mono(1, {}) + mono(1, {{j, 1}}) + mono(1, {{i, 1}, {j, 1}});
    auto vars = iota_vars(n);
    LaurentPoly q = divide_by_vandermonde(antisymmetrize(f, vars), vars);
    return q.x_constant_part();
}

ParamPoly ct_mt_top(const std::vector<int>& b, int a, int lo, int hi, const CTBudget& budget) {
    const int n = static_cast<int>(b.size());
    require(n >= 1, "ct_mt_top: empty bottom row");
    require(strictly_increasing(b), "ct_mt_top: bottom row must be strictly increasing");
    check_top({a, lo, hi}, b.front(), b.back());
    CTExpression e(n);
    for (int i = 0; i < n; ++i) {
        e.one_plus_x_pow(i, b[i] - lo);
        e.mul(xpow(i, -n + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.mul(pair_uv(i, j));
    return apex_restricted(e, a, lo, hi, budget);
}

ParamPoly ct_st_tree(const STTreeShape& shape, const std::vector<int>& b, const std::vector<int>& I, const std::vector<int>& J,
                     const std::optional<TopRestriction>& top, const CTBudget& budget) {
    st_tree_layout(shape);
    check_exception_sets(shape, I, J);
    const int n = shape.n;
    require(static_cast<int>(b.size()) == n, "ct_st_tree: need n diagonal bottoms");
    require(strictly_increasing(b), "ct_st_tree: diagonal bottoms must be strictly increasing");
    const int lo = top ? top->lo : 0;
    if (top) check_top(*top, b.front(), b.back());
    CTExpression e(n);
    for (int i = 0; i < n; ++i) {
        e.one_plus_x_pow(i, b[i] - lo);
        e.mul(xpow(i, -n + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.mul(pair_uv(i, j));
    // -Dbar[v] ~ -x/(1 - (v-1)x), Dund[u] ~ x/(1 + u x)
    auto v_base = [](int i) { return mono(1, {{i, 1}}, {{Param::v, 1}}) - mono(1, {{i, 1}}); };
    auto u_base = [](int i) { return mono(-1, {{i, 1}}, {{Param::u, 1}}); };
    for (int i = 0; i < shape.l(); ++i) {
        int s = shape.s[i];
        if (s == 0) continue;
        e.mul(mono(sign_pow(s), {{i, s}}));
        e.geometric(v_base(i), s);
    }
    const int r = shape.r();
    for (int idx = 0; idx < r; ++idx) {
        int t = shape.t[idx], i = n - r + idx;
        if (t == 0) continue;
        e.mul(xpow(i, t));
        e.geometric(u_base(i), t);
    }
    for (int i : I) e.geometric(v_base(i - 1), 1);
    for (int j : J) {
        e.mul(one_plus_x(j - 1, 1));
        e.geometric(u_base(j - 1), 1);
    }
    if (!top) return constant_term(e, budget);
    return apex_restricted(e, top->a, top->lo, top->hi, budget);
}

// ---- Gog trapezoids ----

namespace {

void check_gog(int m, int n, int k) {
    require(m >= 0, "Gog: m must be non-negative");
    require(n >= 1 && 1 <= k && k <= n, "Gog: need 1 <= k <= n");
}

void check_gog_bottom(int m, int k, const std::vector<int>& b) {
    require(static_cast<int>(b.size()) == k, "Gog: bottom row must have k entries");
    require(strictly_increasing(b), "Gog: bottom row must be strictly increasing");
    for (int j = 1; j <= k; ++j) require(b[j - 1] >= 1 && b[j - 1] <= m + j, "Gog: bottom entry b_j must lie in [1, m+j]");
}

ParamPoly gog_single(int m, int n, int k, const std::vector<int>& b, WeightMode w, const std::optional<TopRestriction>& top,
                     const CTBudget& budget) {
    CTExpression e(n);
    const int lo = top ? top->lo : 0;
    if (w == WeightMode::count || w == WeightMode::inv_pair) {
        const bool uv = w == WeightMode::inv_pair;
        for (int i = 1; i <= k; ++i) {
            e.one_plus_x_pow(i - 1, b[i - 1] - lo);
            e.mul(xpow(i - 1, -n + 1));
        }
        for (int i = k + 1; i <= n; ++i) {
            e.one_plus_x_pow(i - 1, (uv ? m + i + 1 : m + k + 1) - lo);
            e.mul(xpow(i - 1, -n + i - k));
            if (uv) e.geometric(mono(-1, {{i - 1, 1}}, {{Param::u, 1}}), i - k);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.mul(uv ? pair_uv(i, j) : pair_count(i, j));
        if (!top) return constant_term(e, budget);
        return apex_restricted(e, top->a, top->lo, top->hi, budget);
    }
    require(w == WeightMode::min_max, "gog_ct: top_min_max weights apply to pentagons only");
    require(!top, "gog_ct: apex restriction is available for count and inv_pair weights");
    int start = 1;
    if (b[0] == 1) {
        e.mul(par(Param::P));
        e.mul(one_plus_x(0, 2));
        e.mul(xpow(0, -n + 1));
        e.geometric(mono(-1, {{0, 1}}, {{Param::P, 1}}), 1);
        start = 2;
    }
    for (int i = start; i <= k; ++i) {
        e.one_plus_x_pow(i - 1, b[i - 1]);
        e.mul(xpow(i - 1, -n + 1));
    }
    for (int i = k + 1; i <= n; ++i) {
        e.mul(mono(1, {}) + mono(1, {{i - 1, 1}}, {{Param::Q, 1}}));
        e.mul(one_plus_x(i - 1, m + k));
        e.mul(xpow(i - 1, -n + i - k));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.mul(pair_count(i, j));
    return constant_term(e, budget);
}

}  // namespace

ParamPoly gog_ct(const GogCTSpec& spec, const CTBudget& budget) {
    const int m = spec.m, n = spec.n, k = spec.k;
    check_gog(m, n, k);
    if (spec.top) require(spec.top->lo <= spec.top->a && spec.top->a <= spec.top->hi, "apex restriction needs lo <= a <= hi");
    auto one = [&](const std::vector<int>& b) {
        if (spec.top) require(spec.top->lo <= b.front() && spec.top->lo <= 1 && m + n <= spec.top->hi,
                              "Gog apex restriction needs lo <= 1 and hi >= m+n");
        return gog_single(m, n, k, b, spec.weights, spec.top, budget);
    };
    if (spec.bottom) {
        check_gog_bottom(m, k, *spec.bottom);
        return one(*spec.bottom);
    }
    ParamPoly total;
    for (const auto& b : gog_bottom_rows(m, k)) {
        ParamPoly p = one(b);
        if (spec.weights == WeightMode::min_max && b.back() == m + k) p = p * par(Param::Q);
        total += p;
    }
    return total;
}

// ---- Gog pentagons ----

namespace {

void check_pentagon(int m, int n, int kL, int kR) {
    require(m >= 0, "pentagon: m must be non-negative");
    require(n >= 1 && kL >= 1 && kR >= 1 && kL <= n && kR <= n, "pentagon: need 1 <= kL, kR <= n");
    require(kL + kR >= n + 1, "pentagon: need kL + kR >= n + 1");
}

int sign_binom2(int L) { return sign_pow(static_cast<long>(L) * (L - 1) / 2); }

ParamPoly pentagon_count_uv(int m, int n, int kL, int kR, const std::vector<int>& b, bool uv, const CTBudget& budget) {
    const int L = n - kR;
    CTExpression e(n);
    e.mul(LaurentPoly(sign_binom2(L)));
    for (int i = 1; i <= L; ++i) {
        e.mul(one_plus_x(i - 1, i));
        e.mul(xpow(i - 1, 1 - kR - i));
        if (uv) e.geometric(mono(1, {{i - 1, 1}}, {{Param::v, 1}}) - mono(1, {{i - 1, 1}}), n - kR - i + 1);
    }
    for (int i = L + 1; i <= kL; ++i) {
        e.one_plus_x_pow(i - 1, b[i - L - 1]);
        e.mul(xpow(i - 1, -n + 1));
    }
    for (int i = kL + 1; i <= n; ++i) {
        e.mul(one_plus_x(i - 1, uv ? m + i + 1 : m + kL + 1));
        e.mul(xpow(i - 1, -n + i - kL));
        if (uv) e.geometric(mono(-1, {{i - 1, 1}}, {{Param::u, 1}}), i - kL);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.mul(uv ? pair_uv(i, j) : pair_count(i, j));
    return constant_term(e, budget);
}

ParamPoly pentagon_bottom_min_max(int m, int n, int kL, int kR, const std::vector<int>& b, const CTBudget& budget) {
    const int L = n - kR;
    CTExpression e(n);
    e.mul(LaurentPoly(sign_binom2(L)));
    for (int i = 1; i <= L; ++i) {
        e.mul(mono(1, {}) + mono(1, {{i - 1, 1}}) - mono(1, {{i - 1, 1}}, {{Param::QL, 1}}));
        e.mul(one_plus_x(i - 1, i));
        e.mul(xpow(i - 1, 1 - kR - i));
    }
    for (int i = L + 1; i <= kL; ++i) {
        e.one_plus_x_pow(i - 1, b[i - L - 1]);
        e.mul(xpow(i - 1, -n + 1));
    }
    for (int i = kL + 1; i <= n; ++i) {
        e.mul(mono(1, {}) + mono(1, {{i - 1, 1}}, {{Param::QR, 1}}));
        e.mul(one_plus_x(i - 1, m + kL));
        e.mul(xpow(i - 1, -n + i - kL));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.mul(pair_count(i, j));
    return constant_term(e, budget);
}

// Four weights: top minima PL, top maxima PR, bottom minima QL (excluding b_{n-kR+1}),
// bottom maxima QR (excluding b_kL), over pentagons with a top minimum and a top maximum.
ParamPoly pentagon_four_weight(int m, int n, int kL, int kR, const std::vector<int>& b, const CTBudget& budget) {
    const int L = n - kR;
    if (n == 1) return (m == 0 && b[0] == 1) ? par(Param::PL) * par(Param::PR) : ParamPoly();
    if (L == 0 && b.front() != 1) return {};
    if (kL == n && b.back() != m + n) return {};
    CTExpression e(n);
    e.mul(LaurentPoly(sign_binom2(L) * (L >= 1 ? -1 : 1)));
    e.mul(par(Param::PL));
    e.mul(one_plus_x(0, 2));
    e.mul(xpow(0, -kR + 1));
    e.geometric(mono(-1, {{0, 1}}, {{Param::PL, 1}}), 1);
    e.mul(par(Param::PR));
    e.mul(xpow(n - 1, -kL + 1));
    e.mul(one_plus_x(n - 1, kL + m));
    e.geometric(mono(1, {{n - 1, 1}}, {{Param::PR, 1}}) - mono(1, {{n - 1, 1}}), 1);
    if (L >= 1) e.mul(par(Param::QL));
    if (kL <= n - 1) e.mul(par(Param::QR));
    for (int i = 2; i <= L; ++i) {
        e.mul(mono(1, {}) + mono(1, {{i - 1, 1}}) - mono(1, {{i - 1, 1}}, {{Param::QL, 1}}));
        e.mul(one_plus_x(i - 1, i));
        e.mul(xpow(i - 1, 1 - kR - i));
    }
    for (int i = std::max(L + 1, 2); i <= std::min(kL, n - 1); ++i) {
        e.one_plus_x_pow(i - 1, b[i - L - 1]);
        e.mul(xpow(i - 1, -n + 1));
    }
    for (int i = kL + 1; i <= n - 1; ++i) {
        e.mul(mono(1, {}) + mono(1, {{i - 1, 1}}, {{Param::QR, 1}}));
        e.mul(one_plus_x(i - 1, m + kL));
        e.mul(xpow(i - 1, -n + i - kL));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.mul(pair_count(i, j));
    return constant_term(e, budget);
}

}  // namespace

std::vector<std::vector<int>> pentagon_bottom_rows(int m, int n, int kL, int kR) {
    check_pentagon(m, n, kL, kR);
    const int first = std::max(1, n - kR + 1), last = kL;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int j) {
        if (j > last) {
            out.push_back(cur);
            return;
        }
        int lo = std::max(j, cur.empty() ? j : cur.back() + 1);
        for (int v = lo; v <= m + j; ++v) {
            cur.push_back(v);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(first);
    return out;
}

ParamPoly pentagon_ct(const PentagonCTSpec& spec, const CTBudget& budget) {
    const int m = spec.m, n = spec.n, kL = spec.kL, kR = spec.kR;
    check_pentagon(m, n, kL, kR);
    const int L = n - kR;
    auto one = [&](const std::vector<int>& b) -> ParamPoly {
        switch (spec.weights) {
            case WeightMode::count: return pentagon_count_uv(m, n, kL, kR, b, false, budget);
            case WeightMode::inv_pair: return pentagon_count_uv(m, n, kL, kR, b, true, budget);
            case WeightMode::min_max: return pentagon_bottom_min_max(m, n, kL, kR, b, budget);
            case WeightMode::top_min_max: return pentagon_four_weight(m, n, kL, kR, b, budget);
        }
        return {};
    };
    const int len = kL - L;
    if (spec.bottom) {
        const auto& b = *spec.bottom;
        require(static_cast<int>(b.size()) == len, "pentagon: bottom row must have kL + kR - n entries");
        require(strictly_increasing(b), "pentagon: bottom row must be strictly increasing");
        for (int idx = 0; idx < len; ++idx) {
            int j = L + 1 + idx;
            require(b[idx] >= j && b[idx] <= m + j, "pentagon: bottom entry in column j must lie in [j, m+j]");
        }
        return one(b);
    }
    ParamPoly total;
    const bool splice = spec.weights == WeightMode::min_max || spec.weights == WeightMode::top_min_max;
    for (const auto& b : pentagon_bottom_rows(m, n, kL, kR)) {
        ParamPoly p = one(b);
        if (splice) {
            if (b.front() == L + 1) p = p * par(Param::QL);
            if (b.back() == m + kL) p = p * par(Param::QR);
        }
        total += p;
    }
    return total;
}

}  // namespace gogmagog
