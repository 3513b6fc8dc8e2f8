#pragma once

#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/polyring/integer.hpp"

#include <string>
#include <type_traits>

namespace gogmagog {

// a + b*zeta with zeta a primitive sixth root of unity, zeta^2 = zeta - 1.
// C = BigInt gives the ring Z[zeta]; C = BigRat gives the field Q(zeta).
template <class C>
struct Cyclo6 {
    C a{0}, b{0};

    Cyclo6() = default;
    Cyclo6(long x) : a(x) {}  // NOLINT(google-explicit-constructor)
    Cyclo6(C x, C y) : a(std::move(x)), b(std::move(y)) {}

    static Cyclo6 zeta() { return Cyclo6(C(0), C(1)); }
    static Cyclo6 omega() { return zeta() * zeta(); }  // primitive cube root, omega^2 + omega + 1 = 0
    static Cyclo6 from(const C& x) { return Cyclo6(x, C(0)); }

    friend Cyclo6 operator+(const Cyclo6& x, const Cyclo6& y) { return {x.a + y.a, x.b + y.b}; }
    friend Cyclo6 operator-(const Cyclo6& x, const Cyclo6& y) { return {x.a - y.a, x.b - y.b}; }
    Cyclo6 operator-() const { return {-a, -b}; }
    friend Cyclo6 operator*(const Cyclo6& x, const Cyclo6& y) {
        // (a + b z)(c + d z) = ac - bd + (ad + bc + bd) z
        C bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a + bd};
    }
    Cyclo6& operator+=(const Cyclo6& o) { return *this = *this + o; }
    Cyclo6& operator-=(const Cyclo6& o) { return *this = *this - o; }
    Cyclo6& operator*=(const Cyclo6& o) { return *this = *this * o; }

    bool operator==(const Cyclo6& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Cyclo6& o) const { return !(*this == o); }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    // complex conjugate: zeta-bar = 1 - zeta
    Cyclo6 conj() const { return {a + b, -b}; }
    C norm() const { return a * a + a * b + b * b; }

    Cyclo6 inv() const {
        C n = norm();
        if (sgn(n) == 0) throw DomainError("Cyclo6::inv: zero is not invertible");
        Cyclo6 c = conj();
        if constexpr (std::is_same_v<C, BigInt>) {
            if (n != 1) throw DomainError("Cyclo6::inv: not a unit in Z[zeta]");
            return c;
        } else {
            return {c.a / n, c.b / n};
        }
    }
    friend Cyclo6 operator/(const Cyclo6& x, const Cyclo6& y) { return x * y.inv(); }

    Cyclo6 pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyclo6 r(1), base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    std::string str() const { return "(" + a.get_str() + ")+(" + b.get_str() + ")*zeta"; }
};

using Eisenstein = Cyclo6<BigInt>;
using EisensteinQ = Cyclo6<BigRat>;

enum class EisOp { add, mul, pow, inv };

// Exact arithmetic dispatch; for pow, b.a is the exponent (b.b must be 0).
Eisenstein eisenstein_arith(const Eisenstein& a, const Eisenstein& b, EisOp op);

EisensteinQ to_field(const Eisenstein& x);

}  // namespace gogmagog
