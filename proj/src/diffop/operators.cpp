#include "gogmagog/diffop/operators.hpp"

#include "gogmagog/laurent/det.hpp"
#include "gogmagog/polyring/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace gogmagog {

namespace {

MPoly xv(int i) { return MPoly::x(i); }
MPoly uu() { return MPoly::param(Param::u); }
MPoly vv() { return MPoly::param(Param::v); }

// sum_{k>=0} c^k D^{k+offset} f for a nilpotent difference D
template <class D>
MPoly difference_series(const MPoly& f, const MPoly& c, int offset, D&& diff) {
    MPoly g = f;
    for (int k = 0; k < offset; ++k) g = diff(g);
    MPoly r, ck(1);
    while (!g.is_zero()) {
        r += ck * g;
        g = diff(g);
        ck = ck * c;
    }
    return r;
}

void check_vars(int n) {
    if (n < 1) throw PreconditionError("operator: n must be positive");
    if (n > kMaxVars) throw ResourceError("operator: n exceeds the variable limit");
}

}  // namespace

MPoly shift(const MPoly& f, int i, long s) {
    if (s == 0) return f;
    return f.substitute(var_slot(i), xv(i) + MPoly(s));
}

MPoly forward_difference(const MPoly& f, int i) { return shift(f, i, 1) - f; }
MPoly backward_difference(const MPoly& f, int i) { return f - shift(f, i, -1); }

MPoly strict_op(const MPoly& f, int x, int y) {
    MPoly ey = shift(f, y, 1);
    MPoly ex = shift(f, x, -1);
    MPoly exy = shift(ey, x, -1);
    return uu() * ey + vv() * ex + (MPoly(1) - uu() - vv()) * exy;
}

MPoly v_forward_difference(const MPoly& f, int i) {
    return difference_series(f, vv() - MPoly(1), 1, [i](const MPoly& g) { return forward_difference(g, i); });
}

MPoly u_backward_difference(const MPoly& f, int i) {
    return difference_series(f, MPoly(1) - uu(), 1, [i](const MPoly& g) { return backward_difference(g, i); });
}

MPoly inverse_forward_series(const MPoly& f, int i) {
    return difference_series(f, vv() - MPoly(1), 0, [i](const MPoly& g) { return forward_difference(g, i); });
}

MPoly inverse_backward_series(const MPoly& f, int i) {
    return difference_series(f, MPoly(1) - uu(), 0, [i](const MPoly& g) { return backward_difference(g, i); });
}

MPoly binomial_poly(const MPoly& X, int k) {
    if (k < 0) return MPoly();
    MPoly r(1);
    for (int j = 0; j < k; ++j) r = r * (X - MPoly(j));
    return r.scaled(BigRat(1) / BigRat(factorial(k)));
}

MPoly gt_polynomial(int n, const std::optional<TopRestriction>& top) {
    check_vars(n);
    if (!top) {
        MPoly r(1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                r = r * (xv(j) - xv(i) + MPoly(j - i)).scaled(BigRat(1, j - i));
        return r;
    }
    const auto [a, lo, hi] = *top;
    if (lo > hi || a < lo || a > hi) throw PreconditionError("gt_polynomial: need lo <= a <= hi");
    MPoly total;
    for (int beta = 0; beta <= hi - lo; ++beta) {
        BigInt c = gen_binom(beta, a - lo);
        if (c == 0) continue;
        Matrix<MPoly> M(n, std::vector<MPoly>(n));
        for (int i = 0; i < n; ++i) {
            MPoly X = xv(i) + MPoly(i - lo);
            for (int j = 0; j < n; ++j) M[i][j] = binomial_poly(X, j + (j == n - 1 ? beta : 0));
        }
        BigInt s = sign_pow(a + lo + beta) * c;
        total += det_expand(M).scaled(BigRat(s));
    }
    return total;
}

MPoly mn_polynomial(int n, const std::optional<TopRestriction>& top) {
    using CacheKey = std::tuple<int, int, int, int>;
    static std::mutex mu;
    static std::map<CacheKey, MPoly> cache;
    CacheKey key{n, top ? top->a : 0, top ? top->lo : 0, top ? top->hi : -1};
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MPoly f = gt_polynomial(n, top);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) f = strict_op(f, q, p);
    std::lock_guard<std::mutex> g(mu);
    cache.emplace(key, f);
    return f;
}

ParamPoly evaluate_at(const MPoly& f, const std::vector<int>& b) {
    RatPoly r;
    for (const auto& [k, c] : f.terms()) {
        BigRat coeff = c;
        Key rest = k;
        for (int i = 0; i < kMaxVars; ++i) {
            int e = k[var_slot(i)];
            if (e == 0) continue;
            if (i >= static_cast<int>(b.size())) throw PreconditionError("evaluate_at: too few values");
            if (e < 0) throw PreconditionError("evaluate_at: negative exponent");
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), std::abs(b[i]), e);
            if (b[i] < 0 && e % 2) p = -p;
            coeff *= p;
            rest.set(var_slot(i), 0);
        }
        r.add_term(rest, coeff);
    }
    return to_integer(r);
}

ParamPoly mn_evaluate(const std::vector<int>& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] >= b[i]) throw PreconditionError("mn_evaluate: bottom row must be strictly increasing");
    return evaluate_at(mn_polynomial(static_cast<int>(b.size())), b);
}

BigInt mn_evaluate_at_one(const std::vector<int>& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] > b[i]) throw PreconditionError("mn_evaluate_at_one: bottom row must be weakly increasing");
    ParamPoly p = evaluate_at(mn_polynomial(static_cast<int>(b.size())), b);
    return evaluate_params(p, {{Param::u, BigRat(1)}, {Param::v, BigRat(1)}}).get_num();
}

BigInt gt_top_restricted(int a, int lo, int hi, const std::vector<int>& b) {
    ParamPoly p = evaluate_at(gt_polynomial(static_cast<int>(b.size()), TopRestriction{a, lo, hi}), b);
    return p.constant_coeff();
}

ParamPoly mn_top_evaluate(int a, int lo, int hi, const std::vector<int>& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] >= b[i]) throw PreconditionError("mn_top_evaluate: bottom row must be strictly increasing");
    if (!b.empty() && (b.front() < lo || b.back() > hi))
        throw PreconditionError("mn_top_evaluate: bottom row must lie in [lo, hi]");
    return evaluate_at(mn_polynomial(static_cast<int>(b.size()), TopRestriction{a, lo, hi}), b);
}

ParamPoly st_operator_evaluate(const STTreeShape& shape, const std::vector<int>& b, const std::vector<int>& I,
                               const std::vector<int>& J, const std::optional<TopRestriction>& top) {
    st_tree_layout(shape);
    check_exception_sets(shape, I, J);
    const int n = shape.n;
    if (static_cast<int>(b.size()) != n) throw PreconditionError("st_operator_evaluate: need n diagonal bottoms");
    MPoly f = mn_polynomial(n, top);
    for (int i = 0; i < shape.l(); ++i)
        for (int k = 0; k < shape.s[i]; ++k) f = -v_forward_difference(f, i);
    const int r = shape.r();
    for (int idx = 0; idx < r; ++idx)
        for (int k = 0; k < shape.t[idx]; ++k) f = u_backward_difference(f, n - r + idx);
    for (int i : I) f = inverse_forward_series(f, i - 1);
    for (int j : J) f = inverse_backward_series(f, j - 1);
    return evaluate_at(f, b);
}

}  // namespace gogmagog
