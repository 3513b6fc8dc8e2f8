#pragma once

#include "gogmagog/laurent/ct.hpp"
#include "gogmagog/polyring/eisenstein.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gogmagog {

// Rational-function identities are certified by exact evaluation at seeded rational
// points; a point that makes a denominator vanish is redrawn.
inline constexpr uint64_t kDefaultSeed = 20240917;

// Antisymmetrized product of 1/(1 - y_i...y_r) against prod 1/(1-y_i) prod (y_j-y_i)/(1-y_i y_j)
bool verify_lemma_zeilberger(int r, uint64_t seed = kDefaultSeed);

// sum_{b <= b_1 < ... < b_r} det(x_i^{b_j}) == prod x_i^b/(1-x_i) prod (x_j-x_i)/(1-x_i x_j), up to total degree cap
bool verify_summation_identity(int r, int b, int degree_cap);

enum class SymmetricInput { one, e1, e2, e1_squared };
LaurentPoly symmetric_input(SymmetricInput s, int n);

// Gog-type and Magog-type constant terms with weight S; t is the Qt parameter,
// compared symbolically or at the given rational value.
bool verify_theorem_zeil(int n, const LaurentPoly& S, const std::optional<BigRat>& t = std::nullopt);

// general: the (w - y)(wy - 1) kernel; linear: the kernel h_q(w,y) = q w - y/q
enum class AntisymVariant { general, linear };
bool verify_antisymmetrizer_identities(int n, AntisymVariant variant, uint64_t seed = kDefaultSeed);

// det f(x_i, y_j) / (V(x) V(y)) at coinciding points == det of Taylor coefficients.
// f uses slot x_1 for x and x_2 for y.
bool verify_behrend_limits(int n, const LaurentPoly& f);
// det f_j(x_i) / V(x) at coinciding points; each f_j uses slot x_1
bool verify_behrend_limits(int n, const std::vector<LaurentPoly>& fs);

struct AsmDeterminantReport {
    int n = 0;
    long x_shift = 0;
    bool conjugate_root = false;  // q = omega-bar instead of omega
    Eisenstein q;
    Eisenstein d1;  // det C(x+i+j, j) (1 - (-q)^(j+1-i)) / (1+q)
    Eisenstein d2;  // det C(x+i+j, j) + q delta_ij
    Eisenstein d3;  // det -q C(i+j, i) - q^2 delta_ij
    std::optional<bool> d1_is_asm;  // only for x_shift = 0
    bool quotient_pos = false;      // d1 == (-q)^n d2
    bool quotient_neg = false;      // d1 == (-q)^(-n) d2
    bool d3_is_asm = false;
};

AsmDeterminantReport asm_determinants(int n, long x_shift = 0, bool conjugate_root = false);

// cube_root_* at q = exp(2 pi i/3), sixth_root_alternative at q = exp(pi i/3)
enum class SymmetrizerSource { cube_root_ct, sixth_root_alternative, cube_root_alternative };
bool verify_symmetrizer_mt(int n, SymmetrizerSource source, uint64_t seed = kDefaultSeed);

}  // namespace gogmagog
