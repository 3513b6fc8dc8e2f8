#include "gogmagog/polyring/eisenstein.hpp"

namespace gogmagog {

Eisenstein eisenstein_arith(const Eisenstein& a, const Eisenstein& b, EisOp op) {
    switch (op) {
        case EisOp::add: return a + b;
        case EisOp::mul: return a * b;
        case EisOp::pow:
            if (!b.is_rational() || !b.a.fits_slong_p()) throw PreconditionError("eisenstein pow: exponent must be a small integer");
            return a.pow(b.a.get_si());
        case EisOp::inv: return a.inv();
    }
    throw PreconditionError("eisenstein_arith: unknown op");
}

EisensteinQ to_field(const Eisenstein& x) {
    return EisensteinQ(BigRat(x.a), BigRat(x.b));
}

}  // namespace gogmagog
