#pragma once

#include <gmpxx.h>

#include <string>

namespace gogmagog {

using BigInt = mpz_class;
using BigRat = mpq_class;

// a/b in lowest terms; the two-argument mpq constructor does not reduce.
inline BigRat make_rat(const BigInt& a, const BigInt& b) {
    BigRat r(a, b);
    r.canonicalize();
    return r;
}

// n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0. n may be negative.
BigInt gen_binom(long n, long k);

// gen_binom(n,k) == (-1)^k gen_binom(k-n-1,k); requires k >= 0.
bool binom_reflection_check(long n, long k);

BigInt factorial(long n);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRat& x);

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace gogmagog
