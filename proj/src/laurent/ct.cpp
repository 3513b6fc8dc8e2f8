#include "gogmagog/laurent/ct.hpp"

#include <numeric>
#include <string>

namespace gogmagog {

CTExpression& CTExpression::one_plus_x_pow(int i, int e) {
    if (e >= 0)
        factors.push_back(one_plus_x(i, e));
    else
        series.push_back({LaurentPoly::x(i, 1, BigInt(-1)), -e});
    return *this;
}

LaurentPoly one_plus_x(int i, int e) {
    if (e < 0) throw PreconditionError("one_plus_x: negative exponent; use a series factor");
    LaurentPoly r;
    for (int j = 0; j <= e; ++j) {
        Key k;
        k.set(var_slot(i), j);
        r.add_term(k, gen_binom(e, j));
    }
    return r;
}

LaurentPoly linear(std::initializer_list<std::pair<long, Key>> terms) {
    LaurentPoly r;
    for (const auto& [c, k] : terms) r.add_term(k, BigInt(c));
    return r;
}

std::vector<int> truncation_bounds(const CTExpression& e) {
    std::vector<int> D(e.nvars, 0);
    for (int v = 0; v < e.nvars; ++v) {
        int s = 0;
        for (const auto& f : e.factors) s += f.min_exp(var_slot(v));
        D[v] = std::max(0, -s);
    }
    return D;
}

namespace {

void check_series(const SeriesFactor& sf, int nvars) {
    if (sf.exponent < 0) throw MalformedExpression("series factor with negative exponent");
    for (const auto& [k, c] : sf.base.terms()) {
        int deg = 0;
        for (int v = 0; v < kMaxVars; ++v) {
            int ev = k[var_slot(v)];
            if (ev < 0) throw MalformedExpression("series base has a negative exponent: " + monomial_string(k));
            if (ev > 0 && v >= nvars) throw MalformedExpression("series base uses a variable outside the expression");
            deg += ev;
        }
        if (deg <= 0) throw MalformedExpression("series base term without positive x-degree: " + monomial_string(k));
    }
}

LaurentPoly expand_series(const SeriesFactor& sf, const std::vector<int>& D) {
    const int n = static_cast<int>(D.size());
    const int total = std::accumulate(D.begin(), D.end(), 0);
    auto inbox = [&](const Key& k) {
        for (int v = 0; v < n; ++v)
            if (k[var_slot(v)] > D[v]) return false;
        return true;
    };
    LaurentPoly acc, term(1);
    for (int j = 0; j <= total && !term.is_zero(); ++j) {
        acc += term.scaled(gen_binom(sf.exponent + j - 1, j));
        term = term.mul_filtered(sf.base, inbox);
    }
    return acc;
}

}  // namespace

ParamPoly constant_term(const CTExpression& e, const CTBudget& budget) {
    const int n = e.nvars;
    if (n < 0 || n > kMaxVars || n > budget.max_vars) throw ResourceError("constant_term: too many variables");
    for (const auto& f : e.factors)
        if (f.is_zero()) return {};
    for (const auto& sf : e.series) check_series(sf, n);

    std::vector<int> D = truncation_bounds(e);
    uint64_t vol = 1;
    for (int d : D) {
        vol *= static_cast<uint64_t>(d + 1);
        if (vol > budget.max_box_volume) throw ResourceError("constant_term: truncation box exceeds budget");
    }

    std::vector<const LaurentPoly*> all;
    std::vector<LaurentPoly> expanded;
    expanded.reserve(e.series.size());
    for (const auto& sf : e.series) {
        if (sf.exponent == 0) continue;
        expanded.push_back(expand_series(sf, D));
    }
    for (const auto& f : e.factors) all.push_back(&f);
    for (const auto& f : expanded) all.push_back(&f);

    const size_t T = all.size();
    // suffix sums of per-variable min/max exponents of the factors still to come
    std::vector<std::vector<int>> sufmin(T + 1, std::vector<int>(n, 0)), sufmax(T + 1, std::vector<int>(n, 0));
    for (size_t t = T; t-- > 0;) {
        for (int v = 0; v < n; ++v) {
            sufmin[t][v] = sufmin[t + 1][v] + all[t]->min_exp(var_slot(v));
            sufmax[t][v] = sufmax[t + 1][v] + all[t]->max_exp(var_slot(v));
        }
    }

    LaurentPoly acc(1);
    for (size_t t = 0; t < T; ++t) {
        const auto& smn = sufmin[t + 1];
        const auto& smx = sufmax[t + 1];
        acc = acc.mul_filtered(*all[t], [&](const Key& k) {
            for (int v = 0; v < n; ++v) {
                int ev = k[var_slot(v)];
                if (ev + smn[v] > 0 || ev + smx[v] < 0) return false;
            }
            return true;
        });
        if (acc.is_zero()) return {};
        if (acc.size() > budget.max_terms) throw ResourceError("constant_term: intermediate product exceeds term budget");
    }
    return acc.x_constant_part();
}

}  // namespace gogmagog
