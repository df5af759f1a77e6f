#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hwring {

// ---------------------------------------------------------------------------
// Klein four-group Q = Z/2 x Z/2, the quotient of P by its translation
// lattice.  Elements are named 1, a, b, ab; multiplication is bitwise XOR.
// ---------------------------------------------------------------------------

struct QElement {
    std::uint8_t bits{0};  // bit 0: a-part, bit 1: b-part

    friend constexpr bool operator==(QElement, QElement) = default;
};

inline constexpr QElement q_one{0};
inline constexpr QElement q_a{1};
inline constexpr QElement q_b{2};
inline constexpr QElement q_ab{3};
inline constexpr std::array<QElement, 4> q_all{q_one, q_a, q_b, q_ab};

constexpr QElement q_mul(QElement g, QElement h) {
    return QElement{static_cast<std::uint8_t>(g.bits ^ h.bits)};
}

constexpr int q_index(QElement g) { return g.bits; }

/// How g acts on the exponent lattice: componentwise sign on (x, y, z).
/// a fixes x and inverts y, z; b fixes y; ab fixes z.
constexpr std::array<int, 3> action_signs(QElement g) {
    switch (g.bits) {
        case 0: return {+1, +1, +1};
        case 1: return {+1, -1, -1};
        case 2: return {-1, +1, -1};
        default: return {-1, -1, +1};
    }
}

std::string to_string(QElement g);

// ---------------------------------------------------------------------------
// The group P = <a, b | b^-1 a^2 b = a^-2, a^-1 b^2 a = b^-2> presented as an
// extension of Z^3 = <x, y, z> by Q, with x = a^2, y = b^2, z = (ab)^2.
// Normal form: x^m y^n z^k sigma(g) with sigma the section {1, a, b, ab}.
// ---------------------------------------------------------------------------

/// A lattice vector of x, y, z exponents.
struct Lat3 {
    std::int64_t x{0};
    std::int64_t y{0};
    std::int64_t z{0};

    friend constexpr bool operator==(const Lat3&, const Lat3&) = default;
};

constexpr Lat3 q_act(QElement g, const Lat3& u) {
    auto s = action_signs(g);
    return Lat3{s[0] * u.x, s[1] * u.y, s[2] * u.z};
}

/// The factor set f(g, h) = sigma(g) sigma(h) sigma(gh)^-1, as a lattice
/// vector.  Rows give g, columns h.
const Lat3& cocycle(QElement g, QElement h);

struct PElement {
    std::int64_t m{0};  // exponent of x
    std::int64_t n{0};  // exponent of y
    std::int64_t k{0};  // exponent of z
    QElement g{};

    friend constexpr bool operator==(const PElement&, const PElement&) = default;
    friend constexpr std::strong_ordering operator<=>(const PElement& lhs, const PElement& rhs) {
        if (auto c = lhs.m <=> rhs.m; c != 0) return c;
        if (auto c = lhs.n <=> rhs.n; c != 0) return c;
        if (auto c = lhs.k <=> rhs.k; c != 0) return c;
        return lhs.g.bits <=> rhs.g.bits;
    }
};

inline constexpr PElement p_identity{};

/// (u, g)(u', h) = (u + g.u' + f(g, h), gh).
PElement p_mul(const PElement& lhs, const PElement& rhs);

PElement p_inv(const PElement& e);

/// Fold a word over {a, b, A, B} (A = a^-1, B = b^-1) into normal form.
/// Throws bad_letter on anything else.
PElement parse_word(std::string_view word);

/// Canonical text form x^m*y^n*z^k*g, zero exponents and trivial g omitted;
/// the identity prints as "1".
std::string to_string(const PElement& e);

// ---------------------------------------------------------------------------
// Infinite dihedral group D = <t, b | b^2 = 1, t^b = t^-1>.  Elements are
// t^n (flip = false) or t^n b (flip = true).
// ---------------------------------------------------------------------------

struct DElement {
    std::int64_t n{0};
    bool flip{false};

    friend constexpr bool operator==(const DElement&, const DElement&) = default;
    friend constexpr std::strong_ordering operator<=>(const DElement& lhs, const DElement& rhs) {
        if (auto c = lhs.n <=> rhs.n; c != 0) return c;
        return static_cast<int>(lhs.flip) <=> static_cast<int>(rhs.flip);
    }
};

inline constexpr DElement d_identity{};

constexpr DElement d_mul(DElement lhs, DElement rhs) {
    return DElement{lhs.n + (lhs.flip ? -rhs.n : rhs.n),
                    static_cast<bool>(lhs.flip ^ rhs.flip)};
}

constexpr DElement d_inv(DElement e) {
    return e.flip ? e : DElement{-e.n, false};
}

/// The surjection pi : P -> D with a -> t, b -> b; pi(x) = t^2 and
/// pi(y) = pi(z) = 1.
DElement project_dihedral(const PElement& e);

/// The quotient of P by the normal closure of {x, y}, which is again infinite
/// dihedral: a and b map to the two involutive generators and z maps to the
/// square t^2 of their product t = (image of a)(image of b).
DElement project_dihedral_xy(const PElement& e);

enum class DihedralGenSet {
    reflections,  // {b, t.b}: two involutions
    mixed,        // {t, t^-1, b}: images of a and b under pi
};

/// Geodesic word length; closed form, cross-checked against BFS in the tests.
std::uint64_t dihedral_word_length(DElement d, DihedralGenSet gens = DihedralGenSet::reflections);

std::string to_string(DElement e);

}  // namespace hwring
