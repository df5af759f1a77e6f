#include "hwring/laurent.hpp"

#include <algorithm>
#include <cassert>

namespace hwring {

LaurentPoly::LaurentPoly(std::uint32_t modulus) : modulus_(modulus) {
    require_prime(modulus);
}

LaurentPoly LaurentPoly::zero(std::uint32_t modulus) { return LaurentPoly(modulus); }

LaurentPoly LaurentPoly::one(std::uint32_t modulus) {
    return term(modulus, Monomial{}, 1);
}

LaurentPoly LaurentPoly::term(std::uint32_t modulus, Monomial m, std::int64_t coeff) {
    LaurentPoly f(modulus);
    std::uint32_t c = fp::normalize(coeff, modulus);
    if (c != 0) f.terms_.push_back(Term{m, c});
    return f;
}

LaurentPoly LaurentPoly::from_terms(std::uint32_t modulus,
                                    std::vector<std::pair<Monomial, std::int64_t>> entries) {
    LaurentPoly f(modulus);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [m, c] : entries) {
        std::uint32_t r = fp::normalize(c, modulus);
        if (!f.terms_.empty() && f.terms_.back().m == m) {
            std::uint32_t s = fp::add(f.terms_.back().c, r, modulus);
            if (s == 0) {
                f.terms_.pop_back();
            } else {
                f.terms_.back().c = s;
            }
        } else if (r != 0) {
            f.terms_.push_back(Term{m, r});
        }
    }
    return f;
}

std::uint32_t LaurentPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.m < key; });
    return (it != terms_.end() && it->m == m) ? it->c : 0;
}

namespace {

void check_same_modulus(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.modulus() != g.modulus()) throw modulus_mismatch(f.modulus(), g.modulus());
}

}  // namespace

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_modulus(f, g);
    const std::uint32_t p = f.modulus();
    LaurentPoly out(p);
    out.terms_.reserve(f.terms().size() + g.terms().size());
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae && b != be) {
        if (a->m < b->m) {
            out.terms_.push_back(*a++);
        } else if (b->m < a->m) {
            out.terms_.push_back(*b++);
        } else {
            std::uint32_t s = fp::add(a->c, b->c, p);
            if (s != 0) out.terms_.push_back(Term{a->m, s});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, ae);
    out.terms_.insert(out.terms_.end(), b, be);
    return out;
}

LaurentPoly poly_neg(const LaurentPoly& f) {
    LaurentPoly out(f.modulus());
    out.terms_ = f.terms();
    for (Term& t : out.terms_) t.c = fp::neg(t.c, f.modulus());
    return out;
}

LaurentPoly poly_sub(const LaurentPoly& f, const LaurentPoly& g) {
    return poly_add(f, poly_neg(g));
}

LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_modulus(f, g);
    const std::uint32_t p = f.modulus();
    std::vector<std::pair<Monomial, std::int64_t>> prods;
    prods.reserve(f.terms().size() * g.terms().size());
    for (const Term& a : f.terms()) {
        for (const Term& b : g.terms()) {
            prods.emplace_back(Monomial{a.m.i + b.m.i, a.m.j + b.m.j, a.m.k + b.m.k},
                               static_cast<std::int64_t>(fp::mul(a.c, b.c, p)));
        }
    }
    return LaurentPoly::from_terms(p, std::move(prods));
}

LaurentPoly apply_action(const LaurentPoly& f, QElement g) {
    if (g == q_one) return f;
    auto s = action_signs(g);
    // The v, w action extends x -> x^-1 as v -> v^-1 with no coefficient
    // twist; the sign pattern on (i, j, k) matches the one on (x, y, z).
    LaurentPoly out(f.modulus());
    out.terms_.reserve(f.terms().size());
    std::vector<Term> mapped;
    mapped.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        mapped.push_back(Term{Monomial{s[0] * t.m.i, s[1] * t.m.j, s[2] * t.m.k}, t.c});
    }
    std::sort(mapped.begin(), mapped.end(),
              [](const Term& a, const Term& b) { return a.m < b.m; });
    out.terms_ = std::move(mapped);
    return out;
}

bool poly_is_ring_unit(const LaurentPoly& f) {
    return f.term_count() == 1;
}

bool has_even_vw(const LaurentPoly& f) {
    for (const Term& t : f.terms()) {
        if ((t.m.i & 1) != 0 || (t.m.j & 1) != 0) return false;
    }
    return true;
}

LaurentPoly stretch_v(const LaurentPoly& f, std::int64_t factor) {
    assert(factor != 0);
    LaurentPoly out(f.modulus());
    std::vector<Term> mapped;
    mapped.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        mapped.push_back(Term{Monomial{factor * t.m.i, t.m.j, t.m.k}, t.c});
    }
    std::sort(mapped.begin(), mapped.end(),
              [](const Term& a, const Term& b) { return a.m < b.m; });
    out.terms_ = std::move(mapped);
    return out;
}

LaurentPoly scale(const LaurentPoly& f, std::int64_t c) {
    std::uint32_t r = fp::normalize(c, f.modulus());
    LaurentPoly out(f.modulus());
    if (r == 0) return out;
    out.terms_ = f.terms();
    for (Term& t : out.terms_) t.c = fp::mul(t.c, r, f.modulus());
    return out;
}

std::strong_ordering compare(const LaurentPoly& f, const LaurentPoly& g) {
    if (auto c = f.modulus() <=> g.modulus(); c != 0) return c;
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    for (std::size_t idx = 0; idx < ft.size() && idx < gt.size(); ++idx) {
        if (auto c = ft[idx].m <=> gt[idx].m; c != 0) return c;
        if (auto c = ft[idx].c <=> gt[idx].c; c != 0) return c;
    }
    return ft.size() <=> gt.size();
}

namespace {

// Renders one exponent slot, preferring the integral symbol (x or y) when
// the half-exponent is even.
void append_vw(std::string& out, std::int64_t e, const char* whole, const char* half) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    if ((e & 1) == 0) {
        out += whole;
        if (e != 2) out += '^' + std::to_string(e / 2);
    } else {
        out += half;
        if (e != 1) out += '^' + std::to_string(e);
    }
}

void append_plain(std::string& out, std::int64_t e, const char* sym) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += sym;
    if (e != 1) out += '^' + std::to_string(e);
}

std::string render(const LaurentPoly& f, bool dihedral) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const Term& t : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (dihedral) {
            append_plain(mono, t.m.k, "t");
        } else {
            append_vw(mono, t.m.i, "x", "v");
            append_vw(mono, t.m.j, "y", "w");
            append_plain(mono, t.m.k, "z");
        }
        if (mono.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += mono;
        } else {
            out += std::to_string(t.c) + '*' + mono;
        }
    }
    return out;
}

}  // namespace

std::string to_string(const LaurentPoly& f) { return render(f, false); }

std::string to_string_dihedral(const LaurentPoly& f) {
    for (const Term& t : f.terms()) {
        assert(t.m.i == 0 && t.m.j == 0);
        (void)t;
    }
    return render(f, true);
}

}  // namespace hwring
