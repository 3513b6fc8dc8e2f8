#include "gogmagog/triangles/sttree.hpp"

#include "gogmagog/polyring/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace gogmagog {

namespace {

void check_shape(const STTreeShape& sh) {
    if (sh.n < 1) throw PreconditionError("st-tree: n must be positive");
    if (sh.l() + sh.r() > sh.n) throw PreconditionError("st-tree: l + r must not exceed n");
    for (int i = 0; i < sh.l(); ++i) {
        if (sh.s[i] < 0) throw PreconditionError("st-tree: negative s entry");
        if (i > 0 && sh.s[i] > sh.s[i - 1]) throw PreconditionError("st-tree: s must be weakly decreasing");
    }
    for (int i = 0; i < sh.r(); ++i) {
        if (sh.t[i] < 0) throw PreconditionError("st-tree: negative t entry");
        if (i > 0 && sh.t[i] < sh.t[i - 1]) throw PreconditionError("st-tree: t must be weakly increasing");
    }
}

}  // namespace

STTreeLayout st_tree_layout(const STTreeShape& sh) {
    check_shape(sh);
    const int n = sh.n, r = sh.r();
    STTreeLayout L;
    L.n = n;
    L.mask = TriangularArray(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            int d = n - (i - j);
            bool left = j <= sh.l() && i > n - sh.s[j - 1];
            bool right = d > n - r && i > n - sh.t_at(d);
            if (left && right) throw PreconditionError("st-tree: left and right deletions interfere");
            if (!left && !right) L.mask.set(i, j, 0);
        }
    L.ne_bottom.assign(n + 1, {0, 0});
    L.se_bottom.assign(n + 1, {0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            if (!L.mask.has(i, j)) continue;
            if (i > L.ne_bottom[j].first) L.ne_bottom[j] = {i, j};
            int d = n - (i - j);
            if (i > L.se_bottom[d].first) L.se_bottom[d] = {i, j};
        }
    std::set<std::pair<int, int>> seen;
    L.fixed.assign(n + 1, {0, 0});
    for (int d = 1; d <= n; ++d) {
        auto cell = d <= n - r ? L.ne_bottom[d] : L.se_bottom[d];
        if (cell.first == 0) throw PreconditionError("st-tree: diagonal " + std::to_string(d) + " is empty");
        if (!seen.insert(cell).second) throw PreconditionError("st-tree: two diagonals share their bottom entry");
        L.fixed[d] = cell;
    }
    return L;
}

std::vector<int> admissible_I(const STTreeShape& sh) {
    std::vector<int> r{1};
    for (int i = 2; i <= sh.n; ++i)
        if (sh.s_at(i - 1) > sh.s_at(i)) r.push_back(i);
    return r;
}

std::vector<int> admissible_J(const STTreeShape& sh) {
    std::vector<int> r;
    for (int j = 1; j < sh.n; ++j)
        if (sh.t_at(j) < sh.t_at(j + 1)) r.push_back(j);
    r.push_back(sh.n);
    return r;
}

void check_exception_sets(const STTreeShape& sh, const std::vector<int>& I, const std::vector<int>& J) {
    auto ai = admissible_I(sh), aj = admissible_J(sh);
    for (int i : I)
        if (std::find(ai.begin(), ai.end(), i) == ai.end())
            throw PreconditionError("st-tree: " + std::to_string(i) + " is not an admissible exceptional NE-diagonal");
    for (int j : J)
        if (std::find(aj.begin(), aj.end(), j) == aj.end())
            throw PreconditionError("st-tree: " + std::to_string(j) + " is not an admissible exceptional SE-diagonal");
    if (std::set<int>(I.begin(), I.end()).size() != I.size() || std::set<int>(J.begin(), J.end()).size() != J.size())
        throw PreconditionError("st-tree: exception sets must not repeat diagonals");
}

uint64_t enumerate_st_trees(const STTreeShape& sh, const std::vector<int>& b, const std::vector<int>& I, const std::vector<int>& J,
                            const std::optional<TopRestriction>& top, const Visitor& visit) {
    const STTreeLayout L = st_tree_layout(sh);
    check_exception_sets(sh, I, J);
    const int n = sh.n;
    if (static_cast<int>(b.size()) != n) throw PreconditionError("st-tree: need n diagonal bottoms");

    TriangularArray T(n);
    for (int d = 1; d <= n; ++d) T.set(L.fixed[d].first, L.fixed[d].second, b[d - 1]);

    std::vector<std::pair<int, int>> free;
    for (int i = n; i >= 1; --i)
        for (int j = 1; j <= i; ++j)
            if (L.mask.has(i, j) && !T.has(i, j)) {
                if (!L.regular(i, j)) throw PreconditionError("st-tree: a non-bottom entry is not regular");
                free.emplace_back(i, j);
            }

    // exceptional bottoms: cells whose equality with the entry above is not counted
    TriangularArray exc_se(n), exc_ne(n);
    for (int j : J)
        if (L.se_bottom[j].first) exc_se.set(L.se_bottom[j].first, L.se_bottom[j].second, 1);
    for (int i : I)
        if (L.ne_bottom[i].first) exc_ne.set(L.ne_bottom[i].first, L.ne_bottom[i].second, 1);

    uint64_t count = 0;
    auto emit = [&]() {
        if (top && T.at(1, 1) != top->a) return;
        StatVector s;
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= i; ++j) {
                if (!L.regular(i, j)) continue;
                int v = T.at(i, j);
                if (v == T.at(i + 1, j + 1)) {
                    ++s.inv;
                    if (!exc_se.has(i + 1, j + 1)) ++s.inv_J;
                }
                if (v == T.at(i + 1, j)) {
                    ++s.inv_prime;
                    if (!exc_ne.has(i + 1, j)) ++s.inv_prime_I;
                }
            }
        s.top_entry = T.has(1, 1) ? T.at(1, 1) : 0;
        ++count;
        visit(T, s);
    };

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == free.size()) {
            emit();
            return;
        }
        auto [i, j] = free[idx];
        int lo = T.at(i + 1, j), hi = T.at(i + 1, j + 1);
        for (int v = lo; v <= hi; ++v) {
            if (T.has(i, j - 1) && L.regular(i, j - 1) && T.at(i, j - 1) >= v) continue;
            T.set(i, j, v);
            rec(idx + 1);
            T.clear(i, j);
        }
    };
    rec(0);
    return count;
}

ParamPoly st_tree_generating_function(const STTreeShape& sh, const std::vector<int>& b, const std::vector<int>& I,
                                      const std::vector<int>& J, const std::optional<TopRestriction>& top) {
    std::map<std::pair<int, int>, uint64_t> tally;
    enumerate_st_trees(sh, b, I, J, top, [&](const TriangularArray&, const StatVector& s) { ++tally[{s.inv_J, s.inv_prime_I}]; });
    ParamPoly r;
    for (const auto& [e, c] : tally) {
        Key k;
        k.set(param_slot(Param::u), e.first);
        k.set(param_slot(Param::v), e.second);
        r.add_term(k, BigInt(static_cast<unsigned long>(c)));
    }
    return r;
}

}  // namespace gogmagog
