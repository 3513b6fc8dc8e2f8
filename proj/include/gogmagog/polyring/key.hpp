#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string_view>

namespace gogmagog {

// Formal parameters. The slot order is fixed and also fixes serialization order.
enum class Param : int { u = 0, v, P, Q, PL, PR, QL, QR, Qt, aux };

inline constexpr int kParamSlots = 10;
inline constexpr int kMaxVars = 14;
inline constexpr int kKeySlots = kParamSlots + kMaxVars;

std::string_view param_name(int slot);
int param_slot_from_name(std::string_view name);  // -1 if unknown

inline constexpr int param_slot(Param p) { return static_cast<int>(p); }
inline constexpr int var_slot(int i) { return kParamSlots + i; }  // x_{i+1}

// Exponent vector of a monomial: parameter exponents followed by x exponents.
struct Key {
    std::array<int8_t, kKeySlots> e{};

    int operator[](int slot) const { return e[slot]; }
    void set(int slot, int value);
    void add(int slot, int delta) { set(slot, e[slot] + delta); }

    Key operator+(const Key& o) const;

    bool x_is_zero() const;
    Key params_only() const;
    Key x_only() const;

    bool operator==(const Key& o) const { return e == o.e; }
    auto operator<=>(const Key& o) const { return e <=> o.e; }
};

struct KeyHash {
    size_t operator()(const Key& k) const noexcept {
        uint64_t w[3];
        std::memcpy(w, k.e.data(), sizeof w);
        uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (w[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
        h ^= (w[2] + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2));
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

static_assert(sizeof(Key) == 24);

}  // namespace gogmagog
