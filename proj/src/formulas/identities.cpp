#include "gogmagog/formulas/identities.hpp"

#include "builders.hpp"
#include "gogmagog/laurent/det.hpp"
#include "gogmagog/laurent/symmetric.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/asm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace gogmagog {

using namespace detail;

namespace {

// thrown when a sample point hits a pole; the caller redraws
struct Degenerate {};

constexpr int kMaxRedraws = 1000;

class RatSampler {
  public:
    explicit RatSampler(uint64_t seed) : gen_(seed) {}
    BigRat next() {
        std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
        return make_rat(num(gen_), den(gen_));
    }
    std::vector<BigRat> next(int k) {
        std::vector<BigRat> v;
        for (int i = 0; i < k; ++i) v.push_back(next());
        return v;
    }

  private:
    std::mt19937_64 gen_;
};

BigRat rdiv(const BigRat& a, const BigRat& b) {
    if (sgn(b) == 0) throw Degenerate{};
    return a / b;
}

BigRat rpow(const BigRat& x, long e) {
    if (e < 0) return rdiv(1, rpow(x, -e));
    BigRat r(1);
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

EisensteinQ ediv(const EisensteinQ& a, const EisensteinQ& b) {
    if (b.is_zero()) throw Degenerate{};
    return a / b;
}

EisensteinQ epow(const EisensteinQ& x, long e) {
    if (e < 0 && x.is_zero()) throw Degenerate{};
    return x.pow(e);
}

// sum over permutations p of sign(p) * f(p)
template <class T, class F>
T antisym_sum(int n, F&& f) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    T acc(0);
    do {
        T t = f(p);
        if (permutation_sign(p) > 0)
            acc = T(acc + t);
        else
            acc = T(acc - t);
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

// Evaluate check(point) at `points` good sample points.
template <class Draw, class Check>
bool sample_identity(int points, Draw&& draw, Check&& check) {
    int good = 0, attempts = 0;
    while (good < points) {
        if (++attempts > kMaxRedraws) throw ResourceError("identity check: too many degenerate sample points");
        auto pt = draw();
        try {
            if (!check(pt)) return false;
            ++good;
        } catch (const Degenerate&) {
        } catch (const DomainError&) {
        }
    }
    return true;
}

}  // namespace

bool verify_lemma_zeilberger(int r, uint64_t seed) {
    if (r < 1 || r > 6) throw PreconditionError("verify_lemma_zeilberger: need 1 <= r <= 6");
    RatSampler rs(seed);
    return sample_identity(
        r + 2, [&] { return rs.next(r); },
        [&](const std::vector<BigRat>& y) {
            BigRat lhs = antisym_sum<BigRat>(r, [&](const std::vector<int>& p) {
                BigRat t(1);
                for (int i = 0; i < r; ++i) {
                    BigRat prod(1);
                    for (int j = i; j < r; ++j) prod *= y[p[j]];
                    t *= rdiv(rpow(y[p[i]], i), 1 - prod);
                }
                return t;
            });
            BigRat rhs(1);
            for (int i = 0; i < r; ++i) rhs *= rdiv(1, 1 - y[i]);
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) rhs *= rdiv(y[j] - y[i], 1 - y[i] * y[j]);
            return lhs == rhs;
        });
}

namespace {

int total_degree(const Key& k, int nvars) {
    int d = 0;
    for (int v = 0; v < nvars; ++v) d += k[var_slot(v)];
    return d;
}

LaurentPoly trunc_mul(const LaurentPoly& a, const LaurentPoly& b, int nvars, int cap) {
    return a.mul_filtered(b, [&](const Key& k) { return total_degree(k, nvars) <= cap; });
}

// 1/(1 - m) truncated
LaurentPoly geometric_trunc(const LaurentPoly& m, int nvars, int cap) {
    LaurentPoly r(1), p(1);
    for (;;) {
        p = trunc_mul(p, m, nvars, cap);
        if (p.is_zero()) break;
        r += p;
    }
    return r;
}

}  // namespace

bool verify_summation_identity(int r, int b, int cap) {
    if (r < 1 || r > 6) throw PreconditionError("verify_summation_identity: need 1 <= r <= 6");
    if (b < 0 || cap < 0) throw PreconditionError("verify_summation_identity: need b >= 0 and cap >= 0");
    LaurentPoly lhs;
    std::vector<int> bs;
    std::function<void(int, int)> rec = [&](int next, int used) {
        if (static_cast<int>(bs.size()) == r) {
            lhs += antisym_sum<LaurentPoly>(r, [&](const std::vector<int>& p) {
                Key k;
                for (int j = 0; j < r; ++j) k.add(var_slot(p[j]), bs[j]);
                return LaurentPoly::monomial(k, BigInt(1));
            });
            return;
        }
        int remaining = r - static_cast<int>(bs.size()) - 1;
        for (int v = next;; ++v) {
            // the smallest completion v, v+1, ... must fit under the cap
            if (used + v * (remaining + 1) + remaining * (remaining + 1) / 2 > cap) break;
            bs.push_back(v);
            rec(v + 1, used + v);
            bs.pop_back();
        }
    };
    rec(b, 0);
    LaurentPoly rhs(1);
    for (int i = 0; i < r; ++i) {
        rhs = trunc_mul(rhs, xpow(i, b), r, cap);
        rhs = trunc_mul(rhs, geometric_trunc(xpow(i, 1), r, cap), r, cap);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            rhs = trunc_mul(rhs, xpow(j, 1) - xpow(i, 1), r, cap);
            rhs = trunc_mul(rhs, geometric_trunc(mono(1, {{i, 1}, {j, 1}}), r, cap), r, cap);
        }
    return lhs == rhs;
}

LaurentPoly symmetric_input(SymmetricInput s, int n) {
    auto vars = iota_vars(n);
    switch (s) {
        case SymmetricInput::one: return LaurentPoly(1);
        case SymmetricInput::e1: return elem_sym(1, vars);
        case SymmetricInput::e2: return elem_sym(2, vars);
        case SymmetricInput::e1_squared: return elem_sym(1, vars) * elem_sym(1, vars);
    }
    return LaurentPoly(1);
}

bool verify_theorem_zeil(int n, const LaurentPoly& S, const std::optional<BigRat>& t) {
    if (n < 1 || n > 4) throw PreconditionError("verify_theorem_zeil: need 1 <= n <= 4");
    auto vars = iota_vars(n);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> perm = vars;
        std::swap(perm[i], perm[i + 1]);
        if (permute_vars(S, vars, perm) != S) throw PreconditionError("verify_theorem_zeil: S must be symmetric");
    }
    for (const auto& [k, c] : S.terms())
        for (int v = 0; v < n; ++v)
            if (k[var_slot(v)] < 0) throw PreconditionError("verify_theorem_zeil: S must be a polynomial");
    const LaurentPoly T = par(Param::Qt);
    CTExpression L(n), R(n);
    L.mul(S);
    R.mul(S);
    for (int i = 0; i < n; ++i) {
        L.mul(xpow(i, -2 * (i + 1) + 1));
        R.mul(xpow(i, -2 * (i + 1) + 1));
        R.mul((LaurentPoly(1) + T * xpow(i, 1)).pow(i));
        R.geometric(xpow(i, 2), 1);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            L.mul(xpow(j, 1) - xpow(i, 1));
            L.mul(LaurentPoly(1) + T * xpow(j, 1) + mono(1, {{i, 1}, {j, 1}}));
            R.mul(xpow(j, 1) - xpow(i, 1));
            R.geometric(mono(1, {{i, 1}, {j, 1}}), 1);
        }
    ParamPoly a = constant_term(L), b = constant_term(R);
    if (!t) return a == b;
    return evaluate_params(a, {{Param::Qt, *t}}) == evaluate_params(b, {{Param::Qt, *t}});
}

bool verify_antisymmetrizer_identities(int n, AntisymVariant variant, uint64_t seed) {
    if (n < 1 || n > 4) throw PreconditionError("verify_antisymmetrizer_identities: need 1 <= n <= 4");
    const bool gen = variant == AntisymVariant::general;
    auto h1 = [&](const BigRat& w, const BigRat& y) -> BigRat { return gen ? BigRat((w - y) * (w * y - 1)) : BigRat(w - y); };
    auto hq = [&](const BigRat& w, const BigRat& y, const BigRat& q) -> BigRat {
        BigRat a = q * w - rdiv(y, q);
        return gen ? BigRat(a * (q * w * y - rdiv(1, q))) : a;
    };
    RatSampler rs(seed + static_cast<uint64_t>(n) * 7 + (gen ? 1 : 0));
    struct Point {
        std::vector<BigRat> w, y;
        BigRat q;
    };
    return sample_identity(
        n + 3, [&] { return Point{rs.next(n), rs.next(n), rs.next()}; },
        [&](const Point& pt) {
            const auto& w = pt.w;
            const auto& y = pt.y;
            const BigRat& q = pt.q;
            BigRat lhs = antisym_sum<BigRat>(n, [&](const std::vector<int>& p) {
                BigRat num(1), den(1);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) num *= q * w[p[i]] - rdiv(w[p[j]], q);
                for (int i = 0; i < n; ++i) {
                    for (int j = i; j < n; ++j) den *= h1(w[p[j]], y[i]);
                    for (int j = 0; j <= i; ++j) den *= hq(w[p[j]], y[i], q);
                }
                return rdiv(num, den);
            });
            Matrix<BigRat> M(n, std::vector<BigRat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) M[i][j] = rdiv(1, h1(w[i], y[j]) * hq(w[i], y[j], q));
            BigRat D = det_expand(M), rhs;
            if (gen) {
                BigRat den(1);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) den *= h1(y[i], y[j]) * (1 - q * q * w[i] * w[j]);
                rhs = rpow(q, static_cast<long>(n) * (n - 1) / 2) * rdiv(D, den);
            } else {
                BigRat den(1);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) den *= h1(y[j], y[i]);
                rhs = rdiv(D, den);
            }
            return lhs == rhs;
        });
}

namespace {

// coefficient of slot^e, with that slot removed
LaurentPoly coefficient_of(const LaurentPoly& p, int slot, int e) {
    LaurentPoly r;
    for (const auto& [k, c] : p.terms())
        if (k[slot] == e) {
            Key kk = k;
            kk.set(slot, 0);
            r.add_term(kk, c);
        }
    return r;
}

LaurentPoly rename(const LaurentPoly& p, int from_var, int to_var) {
    return p.substitute(var_slot(from_var), xpow(to_var, 1));
}

void check_behrend_input(const LaurentPoly& f, int allowed_vars) {
    for (const auto& [k, c] : f.terms()) {
        if (k.params_only() != Key{}) throw PreconditionError("verify_behrend_limits: parameters are not allowed");
        for (int v = 0; v < kMaxVars; ++v) {
            int e = k[var_slot(v)];
            if (e < 0) throw PreconditionError("verify_behrend_limits: inputs must be polynomials");
            if (e > 0 && v >= allowed_vars) throw PreconditionError("verify_behrend_limits: input uses too many variables");
        }
    }
}

}  // namespace

bool verify_behrend_limits(int n, const LaurentPoly& f) {
    if (n < 1 || n > 4) throw PreconditionError("verify_behrend_limits: need 1 <= n <= 4");
    check_behrend_input(f, 2);
    // a_i -> x_{2+i}, c_j -> x_{2+n+j}
    Matrix<LaurentPoly> M(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = rename(rename(f, 0, 2 + i), 1, 2 + n + j);
    std::vector<int> av, cv;
    for (int i = 0; i < n; ++i) {
        av.push_back(2 + i);
        cv.push_back(2 + n + i);
    }
    LaurentPoly q = divide_by_vandermonde(divide_by_vandermonde(det_expand(M), av), cv);
    for (int i = 0; i < n; ++i) {
        q = rename(q, 2 + i, 0);
        q = rename(q, 2 + n + i, 1);
    }
    // f(x + U, y + V) with U = x_3, V = x_4
    LaurentPoly g = f.substitute(var_slot(0), xpow(0, 1) + xpow(2, 1)).substitute(var_slot(1), xpow(1, 1) + xpow(3, 1));
    Matrix<LaurentPoly> C(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C[i][j] = coefficient_of(coefficient_of(g, var_slot(2), i), var_slot(3), j);
    return q == det_expand(C);
}

bool verify_behrend_limits(int n, const std::vector<LaurentPoly>& fs) {
    if (n < 1 || n > 4) throw PreconditionError("verify_behrend_limits: need 1 <= n <= 4");
    if (static_cast<int>(fs.size()) != n) throw PreconditionError("verify_behrend_limits: need n functions");
    for (const auto& f : fs) check_behrend_input(f, 1);
    Matrix<LaurentPoly> M(n, std::vector<LaurentPoly>(n));
    std::vector<int> av;
    for (int i = 0; i < n; ++i) {
        av.push_back(1 + i);
        for (int j = 0; j < n; ++j) M[i][j] = rename(fs[j], 0, 1 + i);
    }
    LaurentPoly q = divide_by_vandermonde(det_expand(M), av);
    for (int i = 0; i < n; ++i) q = rename(q, 1 + i, 0);
    Matrix<LaurentPoly> C(n, std::vector<LaurentPoly>(n));
    for (int j = 0; j < n; ++j) {
        LaurentPoly g = fs[j].substitute(var_slot(0), xpow(0, 1) + xpow(1, 1));
        for (int i = 0; i < n; ++i) C[i][j] = coefficient_of(g, var_slot(1), i);
    }
    return q == det_expand(C);
}

AsmDeterminantReport asm_determinants(int n, long x, bool conjugate_root) {
    if (n < 1 || n > 8) throw PreconditionError("asm_determinants: need 1 <= n <= 8");
    AsmDeterminantReport r;
    r.n = n;
    r.x_shift = x;
    r.conjugate_root = conjugate_root;
    r.q = conjugate_root ? Eisenstein::omega().conj() : Eisenstein::omega();
    const Eisenstein q = r.q, mq = -q, one(1);
    const Eisenstein inv1q = (one + q).inv();  // 1 + q is a unit
    Matrix<Eisenstein> M1(n, std::vector<Eisenstein>(n)), M2 = M1, M3 = M1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Eisenstein c = Eisenstein::from(gen_binom(x + i + j, j));
            M1[i][j] = c * (one - mq.pow(j + 1 - i)) * inv1q;
            M2[i][j] = c + (i == j ? q : Eisenstein());
            M3[i][j] = -q * Eisenstein::from(gen_binom(i + j, i)) - (i == j ? q * q : Eisenstein());
        }
    r.d1 = det_expand(M1);
    r.d2 = det_expand(M2);
    r.d3 = det_expand(M3);
    const Eisenstein asmn = Eisenstein::from(asm_count_formula(n));
    if (x == 0) r.d1_is_asm = r.d1 == asmn;
    r.quotient_pos = r.d1 == mq.pow(n) * r.d2;
    r.quotient_neg = r.d1 == mq.pow(-n) * r.d2;
    r.d3_is_asm = r.d3 == asmn;
    return r;
}

namespace {

using EQ = EisensteinQ;

EQ eq(const BigRat& x) { return EQ::from(x); }

EQ eprod_pairs(int n, const std::function<EQ(int, int)>& f) {
    EQ r(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r = r * f(i, j);
    return r;
}

EQ edet(const Matrix<EQ>& M) { return det_expand(M); }

// the 2^n-term sums
EQ sumform(int n, const std::vector<EQ>& xs, const EQ& q, bool use_ct) {
    EQ tot(0);
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s(n);
        int S = 0;
        for (int i = 0; i < n; ++i) S += s[i] = (mask >> i) & 1;
        EQ t(1);
        if (use_ct) {
            t = EQ(sign_pow(static_cast<long>(n - 1) * S + n * (n - 1) / 2)) * epow(q, -S);
            for (int i = 0; i < n; ++i) t = t * epow(EQ(1) + xs[i], -n * s[i]);
            t = t * eprod_pairs(n, [&](int i, int j) {
                    long si = s[i], sj = s[j];
                    return (EQ(1) + xs[i] * xs[j]) * EQ(si - sj) + xs[i] * EQ(1 - si - 2 * sj + 3 * si * sj) +
                           xs[j] * EQ(-1 + sj + 2 * si - 3 * si * sj);
                });
        } else {
            t = epow(-q, -S) * EQ(sign_pow(S * (S - 1) / 2 + (n - S) * (n - S - 1) / 2 + n));
            for (int i = 0; i < n; ++i) t = t * epow(xs[i], static_cast<long>(n) * (s[i] - 1));
            t = t * eprod_pairs(n, [&](int i, int j) {
                    long si = s[i], sj = s[j];
                    return (EQ(1) + xs[i] * xs[j]) * EQ(si - sj) + xs[i] * EQ(-1 + si + 2 * sj - 3 * si * sj) +
                           xs[j] * EQ(1 - sj - 2 * si + 3 * si * sj);
                });
        }
        tot = tot + t;
    }
    return tot;
}

template <class F>
EQ antisym_e(int n, const std::vector<EQ>& xs, F&& f) {
    return antisym_sum<EQ>(n, [&](const std::vector<int>& p) {
        std::vector<EQ> z(n);
        for (int i = 0; i < n; ++i) z[i] = xs[p[i]];
        return f(z);
    });
}

}  // namespace

bool verify_symmetrizer_mt(int n, SymmetrizerSource source, uint64_t seed) {
    if (n < 1 || n > 4) throw PreconditionError("verify_symmetrizer_mt: need 1 <= n <= 4");
    RatSampler rs(seed + static_cast<uint64_t>(n) * 13 + static_cast<uint64_t>(source));
    const EQ one(1);
    auto draw = [&] {
        std::vector<EQ> xs;
        for (int i = 0; i < n; ++i) xs.push_back(eq(rs.next()));
        return xs;
    };
    auto vdm = [&](const std::vector<EQ>& xs) { return eprod_pairs(n, [&](int i, int j) { return xs[j] - xs[i]; }); };
    auto gog_core = [&](const std::vector<EQ>& z, bool minus) {
        return eprod_pairs(n, [&](int i, int j) { return minus ? one - z[j] + z[i] * z[j] : one + z[j] + z[i] * z[j]; });
    };
    // det of x_i^j - (-1-x_i)^-(j+1) / q
    auto det_f2 = [&](const std::vector<EQ>& xs, const EQ& q) {
        Matrix<EQ> M(n, std::vector<EQ>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M[i][j] = epow(xs[i], j) - ediv(epow(-one - xs[i], -(j + 1)), q);
        return edet(M);
    };
    return sample_identity(n + 3, draw, [&](const std::vector<EQ>& xs) {
        if (source == SymmetrizerSource::cube_root_ct) {
            const EQ q = EQ::omega();
            EQ lhs = antisym_e(n, xs, [&](const std::vector<EQ>& z) {
                EQ t = gog_core(z, false);
                for (int i = 0; i < n; ++i) t = t * epow(one + z[i], i + 1) * epow(z[i], -n + 1);
                return t;
            });
            EQ pre(1);
            for (const auto& x : xs) pre = pre * ediv(epow(one + x, n + 1) * epow(x, -n + 1), x + one + ediv(one, q));
            Matrix<EQ> M(n, std::vector<EQ>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    M[i][j] = epow(xs[i] + one + q, j) * (one - epow(-one - xs[i], -(j + 1)) * epow(q, -(j + 1)));
            EQ F1 = pre * edet(M), F2 = pre * det_f2(xs, q), F3 = pre * sumform(n, xs, q, true);
            return lhs == F1 && lhs == F2 && lhs == F3;
        }
        if (source == SymmetrizerSource::cube_root_alternative) {
            const EQ q = EQ::omega();
            EQ V = vdm(xs);
            EQ lhs = ediv(antisym_e(n, xs,
                                    [&](const std::vector<EQ>& z) {
                                        EQ t = gog_core(z, false);
                                        for (int i = 0; i < n; ++i) t = t * epow(one + z[i], i + 1);
                                        return t;
                                    }),
                          V);
            EQ pre(1);
            for (const auto& x : xs) pre = pre * ediv(epow(one + x, n + 1), x + one + ediv(one, q));
            EQ G1 = ediv(pre * det_f2(xs, q), V), G2 = ediv(pre * sumform(n, xs, q, true), V);
            return lhs == G1 && lhs == G2;
        }
        const EQ q = EQ::zeta();
        EQ lhs = antisym_e(n, xs, [&](const std::vector<EQ>& z) {
            EQ t = gog_core(z, true);
            for (int i = 0; i < n; ++i) t = t * epow(one - z[i], -n) * epow(z[i], -n + 1 - (i + 1));
            return t;
        });
        EQ pre(1);
        for (const auto& x : xs) pre = pre * ediv(epow(one - x, -n) * epow(x, -n + 1), ediv(x, q) - one);
        Matrix<EQ> M1(n, std::vector<EQ>(n)), M2 = M1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                M1[i][j] = epow(one - xs[i] * q, j) * (epow(q, -(j + 1)) - epow(xs[i], -(j + 1)));
                M2[i][j] = -epow(xs[i], -(j + 1)) + ediv(epow(one - xs[i], j), q);
            }
        EQ H1 = pre * edet(M1), H2 = pre * edet(M2), H3 = pre * sumform(n, xs, q, false);
        return lhs == H1 && lhs == H2 && lhs == H3;
    });
}

}  // namespace gogmagog
