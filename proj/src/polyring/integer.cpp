#include "gogmagog/polyring/integer.hpp"

#include "gogmagog/polyring/errors.hpp"

namespace gogmagog {

BigInt gen_binom(long n, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long i = 0; i < k; ++i) num *= BigInt(n - i);
    BigInt den = factorial(k);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

bool binom_reflection_check(long n, long k) {
    if (k < 0) throw PreconditionError("binom_reflection_check: k must be >= 0");
    return gen_binom(n, k) == sign_pow(k) * gen_binom(k - n - 1, k);
}

BigInt factorial(long n) {
    if (n < 0) throw PreconditionError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::string to_string(const BigRat& x) {
    return x.get_str();
}

}  // namespace gogmagog
