#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace g24::gf {

// GF(16) = GF(2)[x]/(x^4+x+1). An element is its coefficient bitmask:
// bit k holds the coefficient of x^k, so values run from 0 to 15.
using Fe = std::uint8_t;

inline constexpr int field_order = 16;
inline constexpr unsigned modulus = 0x13; // x^4 + x + 1, primitive

namespace detail {

constexpr Fe mul_poly(unsigned a, unsigned b)
{
    unsigned acc = 0;
    for (int i = 0; i < 4; ++i)
        if (b >> i & 1u)
            acc ^= a << i;
    for (int bit = 7; bit >= 4; --bit)
        if (acc >> bit & 1u)
            acc ^= modulus << (bit - 4);
    return static_cast<Fe>(acc);
}

struct Tables {
    std::array<std::array<Fe, 16>, 16> mul{};
    std::array<Fe, 16> conj{};
    std::array<Fe, 16> inv{};
    std::array<Fe, 15> exp{}; // powers of the generator x
    std::array<int, 16> log{};
};

constexpr Tables make_tables()
{
    Tables t{};
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b)
            t.mul[a][b] = mul_poly(a, b);

    // x (= 2) generates the multiplicative group since the modulus is primitive.
    t.log[0] = -1;
    unsigned p = 1;
    for (int i = 0; i < 15; ++i) {
        t.exp[i] = static_cast<Fe>(p);
        t.log[p] = i;
        p = mul_poly(p, 2);
    }
    for (unsigned a = 1; a < 16; ++a)
        t.inv[a] = t.exp[(15 - t.log[a]) % 15];

    // conjugation a -> a^4, the involutory automorphism fixing GF(4)
    for (unsigned a = 0; a < 16; ++a) {
        Fe sq = mul_poly(a, a);
        t.conj[a] = mul_poly(sq, sq);
    }
    return t;
}

inline constexpr Tables tables = make_tables();

static_assert(tables.mul[8][2] == 3);
static_assert(tables.conj[2] == 3);
static_assert(tables.inv[2] == 9);

} // namespace detail

constexpr Fe add(Fe a, Fe b) { return static_cast<Fe>(a ^ b); }
constexpr Fe mul(Fe a, Fe b) { return detail::tables.mul[a][b]; }
constexpr Fe conj(Fe a) { return detail::tables.conj[a]; }

inline Fe inv(Fe a)
{
    if (a == 0)
        throw std::domain_error("gf16: zero has no multiplicative inverse");
    return detail::tables.inv[a];
}

} // namespace g24::gf
