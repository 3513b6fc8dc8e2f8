#include "gogmagog/polyring/key.hpp"

#include "gogmagog/polyring/errors.hpp"

#include <string>

namespace gogmagog {

namespace {
constexpr std::string_view kNames[kParamSlots] = {"u", "v", "P", "Q", "PL", "PR", "QL", "QR", "Qt", "aux"};
}

std::string_view param_name(int slot) {
    if (slot < 0 || slot >= kParamSlots) throw PreconditionError("param_name: slot out of range");
    return kNames[slot];
}

int param_slot_from_name(std::string_view name) {
    for (int i = 0; i < kParamSlots; ++i)
        if (kNames[i] == name) return i;
    return -1;
}

void Key::set(int slot, int value) {
    if (value < -127 || value > 127)
        throw ResourceError("exponent " + std::to_string(value) + " exceeds the int8 key range");
    e[slot] = static_cast<int8_t>(value);
}

Key Key::operator+(const Key& o) const {
    Key r;
    for (int i = 0; i < kKeySlots; ++i) {
        int s = e[i] + o.e[i];
        if (s < -127 || s > 127) throw ResourceError("exponent overflow in monomial product");
        r.e[i] = static_cast<int8_t>(s);
    }
    return r;
}

bool Key::x_is_zero() const {
    for (int i = kParamSlots; i < kKeySlots; ++i)
        if (e[i] != 0) return false;
    return true;
}

Key Key::params_only() const {
    Key r;
    for (int i = 0; i < kParamSlots; ++i) r.e[i] = e[i];
    return r;
}

Key Key::x_only() const {
    Key r;
    for (int i = kParamSlots; i < kKeySlots; ++i) r.e[i] = e[i];
    return r;
}

}  // namespace gogmagog
