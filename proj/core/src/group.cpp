#include "hwring/group.hpp"

#include "hwring/errors.hpp"

namespace hwring {

std::string to_string(QElement g) {
    switch (g.bits) {
        case 0: return "1";
        case 1: return "a";
        case 2: return "b";
        default: return "ab";
    }
}

const Lat3& cocycle(QElement g, QElement h) {
    // Rows g, columns h, entries as (x, y, z) exponents.  Derived from the
    // commutation identity b a b^-1 a^-1 = x^-1 y z^-1 together with
    // a^2 = x, b^2 = y, (ab)^2 = z.
    static const Lat3 table[4][4] = {
        /* 1  */ {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
        /* a  */ {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}, {1, 0, 0}},
        /* b  */ {{0, 0, 0}, {-1, 1, -1}, {0, 1, 0}, {-1, 0, -1}},
        /* ab */ {{0, 0, 0}, {0, -1, 1}, {0, -1, 0}, {0, 0, 1}},
    };
    return table[q_index(g)][q_index(h)];
}

PElement p_mul(const PElement& lhs, const PElement& rhs) {
    Lat3 acted = q_act(lhs.g, Lat3{rhs.m, rhs.n, rhs.k});
    const Lat3& f = cocycle(lhs.g, rhs.g);
    return PElement{lhs.m + acted.x + f.x,
                    lhs.n + acted.y + f.y,
                    lhs.k + acted.z + f.z,
                    q_mul(lhs.g, rhs.g)};
}

PElement p_inv(const PElement& e) {
    // Solve (u, g)(u', g) = (0, 1): u' = g.(-u - f(g, g)), using that every
    // Q-action has order <= 2.
    const Lat3& f = cocycle(e.g, e.g);
    Lat3 u = q_act(e.g, Lat3{-e.m - f.x, -e.n - f.y, -e.k - f.z});
    return PElement{u.x, u.y, u.z, e.g};
}

PElement parse_word(std::string_view word) {
    static const PElement gen_a{0, 0, 0, q_a};
    static const PElement gen_b{0, 0, 0, q_b};
    PElement acc = p_identity;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        switch (word[pos]) {
            case 'a': acc = p_mul(acc, gen_a); break;
            case 'b': acc = p_mul(acc, gen_b); break;
            case 'A': acc = p_mul(acc, p_inv(gen_a)); break;
            case 'B': acc = p_mul(acc, p_inv(gen_b)); break;
            default: throw bad_letter(word[pos], pos);
        }
    }
    return acc;
}

namespace {

void append_power(std::string& out, const char* sym, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += sym;
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
}

}  // namespace

std::string to_string(const PElement& e) {
    std::string out;
    append_power(out, "x", e.m);
    append_power(out, "y", e.n);
    append_power(out, "z", e.k);
    if (e.g != q_one) {
        if (!out.empty()) out += '*';
        out += to_string(e.g);
    }
    return out.empty() ? "1" : out;
}

DElement project_dihedral(const PElement& e) {
    // pi(x^m y^n z^k) = t^{2m}; sigma images 1, t, b, t.b.
    bool has_a = (e.g.bits & 1) != 0;
    bool has_b = (e.g.bits & 2) != 0;
    return DElement{2 * e.m + (has_a ? 1 : 0), has_b};
}

DElement project_dihedral_xy(const PElement& e) {
    // Killing x and y leaves <abar, bbar | abar^2 = bbar^2 = 1> with
    // t := abar.bbar, so z = (ab)^2 maps to t^2 and sigma images are
    // 1, t.b, b, t.
    std::int64_t t = 2 * e.k;
    switch (e.g.bits) {
        case 0: return DElement{t, false};
        case 1: return DElement{t + 1, true};
        case 2: return DElement{t, true};
        default: return DElement{t + 1, false};
    }
}

std::uint64_t dihedral_word_length(DElement d, DihedralGenSet gens) {
    std::uint64_t abs_n = d.n < 0 ? static_cast<std::uint64_t>(-d.n) : static_cast<std::uint64_t>(d.n);
    if (gens == DihedralGenSet::mixed) {
        return abs_n + (d.flip ? 1 : 0);
    }
    // Alternating words in the involutions u = b, s = t.b: rotations t^n
    // need 2|n| letters; the reflection t^n b ends in the letter nearer to n.
    if (!d.flip) return 2 * abs_n;
    return d.n >= 1 ? 2 * abs_n - 1 : 2 * abs_n + 1;
}

std::string to_string(DElement e) {
    std::string out;
    append_power(out, "t", e.n);
    if (e.flip) {
        if (!out.empty()) out += '*';
        out += 'b';
    }
    return out.empty() ? "1" : out;
}

}  // namespace hwring
