#include "gogmagog/laurent/symmetric.hpp"

#include <algorithm>
#include <numeric>

namespace gogmagog {

std::vector<int> iota_vars(int n, int first) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), first);
    return v;
}

int permutation_sign(const std::vector<int>& perm) {
    int s = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

LaurentPoly permute_vars(const LaurentPoly& p, const std::vector<int>& vars, const std::vector<int>& perm) {
    LaurentPoly r;
    for (const auto& [k, c] : p.terms()) {
        Key nk = k;
        for (size_t i = 0; i < vars.size(); ++i) nk.set(var_slot(vars[perm[i]]), k[var_slot(vars[i])]);
        r.add_term(nk, c);
    }
    return r;
}

namespace {

LaurentPoly signed_orbit_sum(const LaurentPoly& p, const std::vector<int>& vars, int budget, bool with_sign) {
    if (static_cast<int>(vars.size()) > budget)
        throw ResourceError("antisymmetrize: " + std::to_string(vars.size()) + " variables exceed the factorial budget");
    std::vector<int> perm(vars.size());
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly r;
    do {
        LaurentPoly t = permute_vars(p, vars, perm);
        if (with_sign && permutation_sign(perm) < 0)
            r -= t;
        else
            r += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

}  // namespace

LaurentPoly antisymmetrize(const LaurentPoly& p, const std::vector<int>& vars, int factorial_budget) {
    return signed_orbit_sum(p, vars, factorial_budget, true);
}

LaurentPoly symmetrize(const LaurentPoly& p, const std::vector<int>& vars, int factorial_budget) {
    return signed_orbit_sum(p, vars, factorial_budget, false);
}

LaurentPoly elem_sym(int q, const std::vector<int>& vars) {
    if (q < 0) throw PreconditionError("elem_sym: q must be >= 0");
    // coefficient extraction from prod (1 + t x_i), tracked by degree
    std::vector<LaurentPoly> e(q + 1);
    e[0] = LaurentPoly(1);
    for (int v : vars)
        for (int d = q; d >= 1; --d) e[d] += e[d - 1] * LaurentPoly::x(v);
    return e[q];
}

LaurentPoly complete_hom(int b, const std::vector<int>& vars, bool inverted) {
    if (b < 0) throw PreconditionError("complete_hom: b must be >= 0");
    const int sgn_e = inverted ? -1 : 1;
    // h_b(x_1..x_k) = sum_j x_k^j h_{b-j}(x_1..x_{k-1})
    std::vector<LaurentPoly> h(b + 1);
    h[0] = LaurentPoly(1);
    for (int v : vars) {
        std::vector<LaurentPoly> nh(b + 1);
        for (int d = 0; d <= b; ++d) {
            LaurentPoly acc;
            for (int j = 0; j <= d; ++j)
                if (!h[d - j].is_zero()) acc += h[d - j] * LaurentPoly::x(v, sgn_e * j);
            nh[d] = std::move(acc);
        }
        h = std::move(nh);
    }
    return h[b];
}

LaurentPoly vandermonde(const std::vector<int>& vars) {
    LaurentPoly r(1);
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) r *= LaurentPoly::x(vars[j]) - LaurentPoly::x(vars[i]);
    return r;
}

LaurentPoly divide_by_difference(const LaurentPoly& p, int a, int b) {
    if (p.is_zero()) return {};
    const int sa = var_slot(a);
    int shift = std::max(0, -p.min_exp(sa));
    LaurentPoly r = shift ? p * LaurentPoly::x(a, shift) : p;
    LaurentPoly q;
    while (!r.is_zero()) {
        int d = r.max_exp(sa);
        if (d <= 0) throw InexactDivision("divide_by_difference: nonzero remainder");
        LaurentPoly lead;
        for (const auto& [k, c] : r.terms())
            if (k[sa] == d) {
                Key nk = k;
                nk.set(sa, d - 1);
                lead.add_term(nk, c);
            }
        q += lead;
        r -= lead * (LaurentPoly::x(a) - LaurentPoly::x(b));
    }
    return shift ? q * LaurentPoly::x(a, -shift) : q;
}

LaurentPoly divide_by_vandermonde(const LaurentPoly& p, const std::vector<int>& vars) {
    LaurentPoly r = p;
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) r = divide_by_difference(r, vars[j], vars[i]);
    return r;
}

}  // namespace gogmagog
