#pragma once

#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/polyring/integer.hpp"
#include "gogmagog/polyring/key.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gogmagog {

// Sparse polynomial over C in the fixed slot layout of Key: formal parameters
// plus up to kMaxVars Laurent variables x_1..x_14. Zero coefficients are never stored.
template <class C>
class Poly {
  public:
    using Coeff = C;
    using Map = std::unordered_map<Key, C, KeyHash>;

    Poly() = default;
    Poly(long c) {  // NOLINT(google-explicit-constructor): constants read naturally
        if (c != 0) t_.emplace(Key{}, C(c));
    }
    static Poly constant(const C& c) { return monomial(Key{}, c); }
    static Poly monomial(const Key& k, const C& c) {
        Poly p;
        if (!gogmagog::is_zero(c)) p.t_.emplace(k, c);
        return p;
    }
    // c * x_{i+1}^e  (i is zero-based)
    static Poly x(int i, int e = 1, const C& c = C(1)) {
        check_var(i);
        Key k;
        k.set(var_slot(i), e);
        return monomial(k, c);
    }
    static Poly param(Param p, int e = 1, const C& c = C(1)) {
        Key k;
        k.set(param_slot(p), e);
        return monomial(k, c);
    }
    static Poly slot(int s, int e = 1, const C& c = C(1)) {
        Key k;
        k.set(s, e);
        return monomial(k, c);
    }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    C coeff(const Key& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? C(0) : it->second;
    }
    C constant_coeff() const { return coeff(Key{}); }

    void add_term(const Key& k, const C& c) {
        if (gogmagog::is_zero(c)) return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (gogmagog::is_zero(it->second)) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [k, c] : o.t_) add_term(k, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly scaled(const C& s) const {
        if (gogmagog::is_zero(s)) return {};
        Poly r = *this;
        for (auto& [k, c] : r.t_) c *= s;
        return r;
    }

    // Product keeping only monomials for which keep(key) is true.
    template <class Keep>
    Poly mul_filtered(const Poly& o, Keep&& keep) const {
        Poly r;
        r.t_.reserve(std::min<size_t>(t_.size() * o.t_.size(), 1u << 20));
        C tmp;
        for (const auto& [ka, ca] : t_) {
            for (const auto& [kb, cb] : o.t_) {
                Key k = ka + kb;
                if (!keep(k)) continue;
                tmp = ca * cb;
                auto [it, fresh] = r.t_.try_emplace(k, tmp);
                if (!fresh) it->second += tmp;
            }
        }
        r.prune_zeros();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        return a.mul_filtered(b, [](const Key&) { return true; });
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(long e) const {
        if (e < 0) throw PreconditionError("Poly::pow: negative exponent");
        Poly r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    int min_exp(int s) const {
        int m = 0;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (first || k[s] < m) m = k[s];
            first = false;
        }
        return m;
    }
    int max_exp(int s) const {
        int m = 0;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (first || k[s] > m) m = k[s];
            first = false;
        }
        return m;
    }

    std::vector<std::pair<Key, C>> sorted_terms() const {
        std::vector<std::pair<Key, C>> v(t_.begin(), t_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    // Terms free of every x variable, i.e. the coefficient of x^0 as a parameter polynomial.
    Poly x_constant_part() const {
        Poly r;
        for (const auto& [k, c] : t_)
            if (k.x_is_zero()) r.t_.emplace(k, c);
        return r;
    }

    // Replace slot s by the polynomial repl. Negative exponents of s need a monomial repl.
    Poly substitute(int s, const Poly& repl) const {
        int lo = 0, hi = 0;
        if (!t_.empty()) {
            lo = min_exp(s);
            hi = max_exp(s);
        }
        if (lo < 0 && repl.size() != 1)
            throw PreconditionError("substitute: negative exponent needs a monomial replacement");
        std::vector<Poly> pos(static_cast<size_t>(std::max(hi, 0)) + 1);
        pos[0] = Poly(1);
        for (int e = 1; e <= hi; ++e) pos[e] = pos[e - 1] * repl;
        Poly inv;
        if (lo < 0) {
            const auto& [rk, rc] = *repl.t_.begin();
            Key nk;
            for (int i = 0; i < kKeySlots; ++i) nk.set(i, -rk[i]);
            inv = Poly::monomial(nk, C(1) / rc);
        }
        Poly r;
        for (const auto& [k, c] : t_) {
            Key rest = k;
            int e = k[s];
            rest.set(s, 0);
            Poly term = Poly::monomial(rest, c);
            if (e >= 0)
                r += term * pos[e];
            else
                r += term * inv.pow(-e);
        }
        return r;
    }

    template <class D, class F>
    Poly<D> map_coeffs(F&& f) const {
        Poly<D> r;
        for (const auto& [k, c] : t_) r.add_term(k, f(c));
        return r;
    }

    // Evaluate with pw(slot, exponent) -> R and conv(C) -> R.
    template <class R, class Pow, class Conv>
    R evaluate(Pow&& pw, Conv&& conv) const {
        R acc = conv(C(0));
        for (const auto& [k, c] : t_) {
            R term = conv(c);
            for (int s = 0; s < kKeySlots; ++s)
                if (k[s] != 0) term = term * pw(s, k[s]);
            acc = acc + term;
        }
        return acc;
    }

  private:
    static void check_var(int i) {
        if (i < 0 || i >= kMaxVars) throw ResourceError("variable index exceeds kMaxVars");
    }
    void prune_zeros() {
        for (auto it = t_.begin(); it != t_.end();) {
            if (gogmagog::is_zero(it->second))
                it = t_.erase(it);
            else
                ++it;
        }
    }

    Map t_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;
// Value type of every generating function: only parameter slots are used.
using ParamPoly = IntPoly;

std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);
std::string monomial_string(const Key& k);

RatPoly to_rational(const IntPoly& p);
IntPoly to_integer(const RatPoly& p);  // throws DomainError on a non-integral coefficient

// Evaluate parameter slots at rationals; x slots must be absent.
BigRat evaluate_params(const IntPoly& p, const std::vector<std::pair<Param, BigRat>>& values);

// p with param slot s replaced by value (integer).
IntPoly specialize(const IntPoly& p, Param s, long value);

}  // namespace gogmagog
