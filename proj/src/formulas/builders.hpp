#pragma once

#include "gogmagog/laurent/ct.hpp"

#include <initializer_list>
#include <utility>

namespace gogmagog::detail {

// c * prod x_i^e * prod param^e
inline LaurentPoly mono(long c, std::initializer_list<std::pair<int, int>> xs, std::initializer_list<std::pair<Param, int>> ps = {}) {
    Key k;
    for (auto [i, e] : xs) k.add(var_slot(i), e);
    for (auto [p, e] : ps) k.add(param_slot(p), e);
    return LaurentPoly::monomial(k, BigInt(c));
}

inline LaurentPoly xpow(int i, int e) { return mono(1, {{i, e}}); }
inline LaurentPoly par(Param p, int e = 1) { return mono(1, {}, {{p, e}}); }

// (x_i - x_j)(1 + x_j + x_i x_j)
inline LaurentPoly pair_count(int i, int j) {
    return (mono(1, {{i, 1}}) - mono(1, {{j, 1}})) * (mono(1, {}) + mono(1, {{j, 1}}) + mono(1, {{i, 1}, {j, 1}}));
}

// (x_i - x_j)(1 + (1-v) x_i + u (x_j + x_i x_j))
inline LaurentPoly pair_uv(int i, int j) {
    return (mono(1, {{i, 1}}) - mono(1, {{j, 1}})) *
           (mono(1, {}) + mono(1, {{i, 1}}) - mono(1, {{i, 1}}, {{Param::v, 1}}) + mono(1, {{j, 1}}, {{Param::u, 1}}) +
            mono(1, {{i, 1}, {j, 1}}, {{Param::u, 1}}));
}

inline LaurentPoly sign_const(int s) { return LaurentPoly(s); }

}  // namespace gogmagog::detail
