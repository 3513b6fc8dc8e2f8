#include "gogmagog/formulas/identities.hpp"
#include "gogmagog/polyring/errors.hpp"
#include "gogmagog/triangles/asm.hpp"

#include <doctest.h>

using namespace gogmagog;

namespace {

LaurentPoly X(int i, int e = 1) { return LaurentPoly::x(i, e); }

}  // namespace

TEST_CASE("antisymmetrized product lemma") {
    for (int r = 1; r <= 4; ++r) CHECK(verify_lemma_zeilberger(r));
    CHECK(verify_lemma_zeilberger(3, 12345));
}

TEST_CASE("bounded strict summation identity") {
    CHECK(verify_summation_identity(1, 0, 8));
    CHECK(verify_summation_identity(2, 2, 8));
    CHECK(verify_summation_identity(3, 1, 8));
}

TEST_CASE("gog-type and magog-type constant terms coincide") {
    for (int n = 1; n <= 3; ++n)
        for (auto s : {SymmetricInput::one, SymmetricInput::e1, SymmetricInput::e2}) {
            CHECK(verify_theorem_zeil(n, symmetric_input(s, n)));
            CHECK(verify_theorem_zeil(n, symmetric_input(s, n), BigRat(3, 2)));
        }
    CHECK(verify_theorem_zeil(2, symmetric_input(SymmetricInput::e1_squared, 2)));
}

TEST_CASE("antisymmetrizer kernel identities") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(verify_antisymmetrizer_identities(n, AntisymVariant::general));
        CHECK(verify_antisymmetrizer_identities(n, AntisymVariant::linear));
    }
}

TEST_CASE("determinant limits at coinciding points") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(verify_behrend_limits(n, (LaurentPoly(1) + X(0)) * (LaurentPoly(1) + X(1))));
        CHECK(verify_behrend_limits(n, (X(0) + X(1).scaled(BigInt(2)) + LaurentPoly(1)).pow(4)));
        std::vector<LaurentPoly> fs;
        for (int j = 0; j < n; ++j) fs.push_back(X(0, j + 2) + X(0).scaled(BigInt(j)));
        CHECK(verify_behrend_limits(n, fs));
    }
    CHECK_THROWS_AS(verify_behrend_limits(2, LaurentPoly::param(Param::u) * X(0)), PreconditionError);
}

TEST_CASE("symmetrizer closed forms for monotone triangles") {
    for (int n = 1; n <= 2; ++n) {
        CHECK(verify_symmetrizer_mt(n, SymmetrizerSource::cube_root_ct));
        CHECK(verify_symmetrizer_mt(n, SymmetrizerSource::sixth_root_alternative));
        CHECK(verify_symmetrizer_mt(n, SymmetrizerSource::cube_root_alternative));
    }
}

TEST_CASE("ASM determinant at a primitive cube root of unity") {
    for (int n = 1; n <= 6; ++n) {
        auto r = asm_determinants(n);
        CHECK(r.d1 == Eisenstein::from(asm_count_formula(n)));
        REQUIRE(r.d1_is_asm.has_value());
        CHECK(*r.d1_is_asm);
        CHECK(r.quotient_pos);
        CHECK(r.quotient_neg == (n % 3 == 0));
        CHECK(r.d3_is_asm);
    }
}

TEST_CASE("ASM determinant at the conjugate root") {
    for (int n = 1; n <= 4; ++n) CHECK(asm_determinants(n, 0, true).quotient_pos);
}

TEST_CASE("shifted ASM determinant keeps the quotient") {
    for (int n = 1; n <= 4; ++n) {
        auto r = asm_determinants(n, 2);
        CHECK_FALSE(r.d1_is_asm.has_value());
        CHECK(r.quotient_pos);
    }
}
