#include "gogmagog/polyring/poly.hpp"

#include <sstream>

namespace gogmagog {

std::string monomial_string(const Key& k) {
    std::ostringstream os;
    bool first = true;
    for (int s = 0; s < kKeySlots; ++s) {
        int e = k[s];
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        if (s < kParamSlots)
            os << param_name(s);
        else
            os << 'x' << (s - kParamSlots + 1);
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

namespace {

template <class C>
std::string poly_string(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.sorted_terms()) {
        std::string mono = monomial_string(k);
        C a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << '*' << mono;
    }
    return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p) { return poly_string(p); }
std::string to_string(const RatPoly& p) { return poly_string(p); }

RatPoly to_rational(const IntPoly& p) {
    return p.map_coeffs<BigRat>([](const BigInt& c) { return BigRat(c); });
}

IntPoly to_integer(const RatPoly& p) {
    return p.map_coeffs<BigInt>([](BigRat c) {
        c.canonicalize();
        if (c.get_den() != 1) throw DomainError("to_integer: non-integral coefficient " + c.get_str());
        return BigInt(c.get_num());
    });
}

BigRat evaluate_params(const IntPoly& p, const std::vector<std::pair<Param, BigRat>>& values) {
    BigRat val[kParamSlots];
    bool set[kParamSlots] = {};
    for (const auto& [prm, x] : values) {
        val[param_slot(prm)] = x;
        set[param_slot(prm)] = true;
    }
    return p.evaluate<BigRat>(
        [&](int s, int e) -> BigRat {
            if (s >= kParamSlots || !set[s])
                throw PreconditionError("evaluate_params: unassigned slot " + std::to_string(s));
            BigRat r = 1;
            BigRat b = val[s];
            if (e < 0) {
                if (sgn(b) == 0) throw DomainError("evaluate_params: zero to a negative power");
                b = 1 / b;
                e = -e;
            }
            for (int i = 0; i < e; ++i) r *= b;
            return r;
        },
        [](const BigInt& c) { return BigRat(c); });
}

IntPoly specialize(const IntPoly& p, Param s, long value) {
    return p.substitute(param_slot(s), IntPoly(value));
}

}  // namespace gogmagog
