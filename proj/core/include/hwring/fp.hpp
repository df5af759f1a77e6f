#pragma once

#include <cstdint>

#include "hwring/errors.hpp"

namespace hwring {

bool is_prime(std::uint32_t n);

/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint32_t p);

// Residue arithmetic mod a small prime.  All inputs except `normalize` must
// already be reduced to [0, p).
namespace fp {

std::uint32_t normalize(std::int64_t value, std::uint32_t p);

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Multiplicative inverse; throws zero_element on 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace fp

/// A residue together with its modulus.  The modulus is part of the value so
/// that mixed-modulus arithmetic fails loudly instead of silently.
struct Coeff {
    std::uint32_t value{0};
    std::uint32_t p{2};

    Coeff() = default;
    Coeff(std::int64_t v, std::uint32_t modulus);

    friend bool operator==(const Coeff&, const Coeff&) = default;
};

Coeff operator+(Coeff a, Coeff b);
Coeff operator-(Coeff a, Coeff b);
Coeff operator*(Coeff a, Coeff b);
Coeff inverse(Coeff a);

}  // namespace hwring
