#include "hwring/group_ring.hpp"

#include <algorithm>
#include <map>

namespace hwring {

namespace {

const Monomial mono_x{2, 0, 0};
const Monomial mono_y{0, 2, 0};
const Monomial mono_z{0, 0, 1};
const Monomial mono_xinv_zinv{-2, 0, -1};
const Monomial mono_yinv{0, -2, 0};
const Monomial mono_yinv_z{0, -2, 1};
const Monomial mono_xinv_y_zinv{-2, 2, -1};

LaurentPoly times_mono(const LaurentPoly& f, const Monomial& m) {
    return poly_mul(LaurentPoly::term(f.modulus(), m, 1), f);
}

void check_same_modulus(std::uint32_t a, std::uint32_t b) {
    if (a != b) throw modulus_mismatch(a, b);
}

}  // namespace

RingElemP::RingElemP(std::uint32_t modulus)
    : comps_{LaurentPoly(modulus), LaurentPoly(modulus), LaurentPoly(modulus),
             LaurentPoly(modulus)} {}

RingElemP::RingElemP(LaurentPoly one, LaurentPoly a, LaurentPoly b, LaurentPoly ab)
    : comps_{std::move(one), std::move(a), std::move(b), std::move(ab)} {
    for (int idx = 1; idx < 4; ++idx) {
        check_same_modulus(comps_[0].modulus(), comps_[idx].modulus());
    }
    for (const LaurentPoly& c : comps_) {
        if (!has_even_vw(c)) {
            throw odd_half_exponent("component " + to_string(c) +
                                    " has a half exponent of x or y");
        }
    }
}

RingElemP RingElemP::zero(std::uint32_t modulus) { return RingElemP(modulus); }

RingElemP RingElemP::identity(std::uint32_t modulus) {
    return scalar(modulus, 1);
}

RingElemP RingElemP::scalar(std::uint32_t modulus, std::int64_t value) {
    RingElemP e(modulus);
    e.comps_[0] = LaurentPoly::term(modulus, Monomial{}, value);
    return e;
}

RingElemP RingElemP::group_element(std::uint32_t modulus, const PElement& g,
                                   std::int64_t coeff) {
    RingElemP e(modulus);
    e.comps_[q_index(g.g)] =
        LaurentPoly::term(modulus, Monomial{2 * g.m, 2 * g.n, g.k}, coeff);
    return e;
}

bool RingElemP::is_zero() const {
    return comps_[0].is_zero() && comps_[1].is_zero() && comps_[2].is_zero() &&
           comps_[3].is_zero();
}

std::array<LaurentPoly, 4> component_mul(const std::array<LaurentPoly, 4>& lhs,
                                         const std::array<LaurentPoly, 4>& rhs) {
    const LaurentPoly& p1 = lhs[0];
    const LaurentPoly& q1 = lhs[1];
    const LaurentPoly& r1 = lhs[2];
    const LaurentPoly& s1 = lhs[3];
    const LaurentPoly& p2 = rhs[0];
    const LaurentPoly& q2 = rhs[1];
    const LaurentPoly& r2 = rhs[2];
    const LaurentPoly& s2 = rhs[3];
    check_same_modulus(p1.modulus(), p2.modulus());

    auto acted = [](const LaurentPoly& f, QElement g) { return apply_action(f, g); };

    LaurentPoly out1 = p1 * p2 + times_mono(q1 * acted(q2, q_a), mono_x) +
                       times_mono(r1 * acted(r2, q_b), mono_y) +
                       times_mono(s1 * acted(s2, q_ab), mono_z);
    LaurentPoly outa = p1 * q2 + q1 * acted(p2, q_a) +
                       times_mono(r1 * acted(s2, q_b), mono_xinv_zinv) +
                       times_mono(s1 * acted(r2, q_ab), mono_yinv);
    LaurentPoly outb = p1 * r2 + times_mono(q1 * acted(s2, q_a), mono_x) +
                       r1 * acted(p2, q_b) +
                       times_mono(s1 * acted(q2, q_ab), mono_yinv_z);
    LaurentPoly outab = p1 * s2 + q1 * acted(r2, q_a) +
                        times_mono(r1 * acted(q2, q_b), mono_xinv_y_zinv) +
                        s1 * acted(p2, q_ab);
    return {std::move(out1), std::move(outa), std::move(outb), std::move(outab)};
}

RingElemP rp_mul(const RingElemP& lhs, const RingElemP& rhs) {
    auto out = component_mul(lhs.parts(), rhs.parts());
    return RingElemP(std::move(out[0]), std::move(out[1]), std::move(out[2]),
                     std::move(out[3]));
}

RingElemP rp_mul_convolution(const RingElemP& lhs, const RingElemP& rhs) {
    check_same_modulus(lhs.modulus(), rhs.modulus());
    const std::uint32_t p = lhs.modulus();
    std::map<PElement, std::uint32_t> acc;
    for (const RingTerm& a : ring_terms(lhs)) {
        for (const RingTerm& b : ring_terms(rhs)) {
            PElement g = p_mul(a.g, b.g);
            std::uint32_t c = fp::mul(a.c, b.c, p);
            auto [it, inserted] = acc.emplace(g, c);
            if (!inserted) {
                it->second = fp::add(it->second, c, p);
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    std::array<std::vector<std::pair<Monomial, std::int64_t>>, 4> comps;
    for (const auto& [g, c] : acc) {
        comps[q_index(g.g)].emplace_back(Monomial{2 * g.m, 2 * g.n, g.k},
                                         static_cast<std::int64_t>(c));
    }
    return RingElemP(LaurentPoly::from_terms(p, std::move(comps[0])),
                     LaurentPoly::from_terms(p, std::move(comps[1])),
                     LaurentPoly::from_terms(p, std::move(comps[2])),
                     LaurentPoly::from_terms(p, std::move(comps[3])));
}

RingElemP rp_add(const RingElemP& lhs, const RingElemP& rhs) {
    return RingElemP(lhs.part(q_one) + rhs.part(q_one), lhs.part(q_a) + rhs.part(q_a),
                     lhs.part(q_b) + rhs.part(q_b), lhs.part(q_ab) + rhs.part(q_ab));
}

RingElemP rp_sub(const RingElemP& lhs, const RingElemP& rhs) {
    return RingElemP(lhs.part(q_one) - rhs.part(q_one), lhs.part(q_a) - rhs.part(q_a),
                     lhs.part(q_b) - rhs.part(q_b), lhs.part(q_ab) - rhs.part(q_ab));
}

RingElemP rp_neg(const RingElemP& e) {
    return RingElemP(-e.part(q_one), -e.part(q_a), -e.part(q_b), -e.part(q_ab));
}

std::vector<RingTerm> ring_terms(const RingElemP& e) {
    std::vector<RingTerm> out;
    for (QElement g : q_all) {
        for (const Term& t : e.part(g).terms()) {
            out.push_back(RingTerm{PElement{t.m.i / 2, t.m.j / 2, t.m.k, g}, t.c});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RingTerm& a, const RingTerm& b) { return a.g < b.g; });
    return out;
}

std::vector<PElement> support(const RingElemP& e) {
    std::vector<PElement> out;
    for (const RingTerm& t : ring_terms(e)) out.push_back(t.g);
    return out;
}

Coeff augmentation(const RingElemP& e) {
    std::uint32_t acc = 0;
    for (QElement g : q_all) {
        for (const Term& t : e.part(g).terms()) {
            acc = fp::add(acc, t.c, e.modulus());
        }
    }
    return Coeff(acc, e.modulus());
}

bool is_trivial_unit(const RingElemP& e) {
    std::size_t n = 0;
    for (QElement g : q_all) n += e.part(g).term_count();
    return n == 1;
}

RingElemP trivial_unit_inverse(const RingElemP& e) {
    if (!is_trivial_unit(e)) {
        throw zero_element("exact inversion needs a single-element support");
    }
    RingTerm t = ring_terms(e).front();
    return RingElemP::group_element(e.modulus(), p_inv(t.g),
                                    static_cast<std::int64_t>(fp::inv(t.c, e.modulus())));
}

RingElemP conjugate(const RingElemP& e, const PElement& w) {
    return translate(p_inv(w), e, w);
}

RingElemP translate(const PElement& left, const RingElemP& e, const PElement& right) {
    RingElemP l = RingElemP::group_element(e.modulus(), left);
    RingElemP r = RingElemP::group_element(e.modulus(), right);
    return rp_mul(rp_mul(l, e), r);
}

std::string to_string(const RingElemP& e) {
    static const char* suffix[4] = {"", "*a", "*b", "*ab"};
    std::string out;
    for (QElement g : q_all) {
        const LaurentPoly& c = e.part(g);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += '(' + to_string(c) + ')' + suffix[q_index(g)];
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// K[D]
// ---------------------------------------------------------------------------

namespace {

void check_t_only(const LaurentPoly& f) {
    for (const Term& t : f.terms()) {
        if (t.m.i != 0 || t.m.j != 0) {
            throw odd_half_exponent("dihedral component " + to_string(f) +
                                    " must involve t only");
        }
    }
}

// f(t) -> f(t^-1)
LaurentPoly reverse_t(const LaurentPoly& f) {
    std::vector<std::pair<Monomial, std::int64_t>> out;
    out.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        out.emplace_back(Monomial{0, 0, -t.m.k}, static_cast<std::int64_t>(t.c));
    }
    return LaurentPoly::from_terms(f.modulus(), std::move(out));
}

}  // namespace

RingElemD::RingElemD(std::uint32_t modulus) : u_(modulus), v_(modulus) {}

RingElemD::RingElemD(LaurentPoly u, LaurentPoly v) : u_(std::move(u)), v_(std::move(v)) {
    check_same_modulus(u_.modulus(), v_.modulus());
    check_t_only(u_);
    check_t_only(v_);
}

RingElemD RingElemD::zero(std::uint32_t modulus) { return RingElemD(modulus); }

RingElemD RingElemD::identity(std::uint32_t modulus) {
    return RingElemD(LaurentPoly::one(modulus), LaurentPoly::zero(modulus));
}

RingElemD RingElemD::group_element(std::uint32_t modulus, DElement d, std::int64_t coeff) {
    LaurentPoly part = LaurentPoly::term(modulus, Monomial{0, 0, d.n}, coeff);
    if (d.flip) return RingElemD(LaurentPoly::zero(modulus), std::move(part));
    return RingElemD(std::move(part), LaurentPoly::zero(modulus));
}

RingElemD rd_mul(const RingElemD& lhs, const RingElemD& rhs) {
    check_same_modulus(lhs.modulus(), rhs.modulus());
    LaurentPoly u = lhs.u() * rhs.u() + lhs.v() * reverse_t(rhs.v());
    LaurentPoly v = lhs.u() * rhs.v() + lhs.v() * reverse_t(rhs.u());
    return RingElemD(std::move(u), std::move(v));
}

RingElemD rd_add(const RingElemD& lhs, const RingElemD& rhs) {
    return RingElemD(lhs.u() + rhs.u(), lhs.v() + rhs.v());
}

RingElemD rd_conjugate(const RingElemD& e, DElement w) {
    RingElemD wi = RingElemD::group_element(e.modulus(), d_inv(w));
    RingElemD we = RingElemD::group_element(e.modulus(), w);
    return rd_mul(rd_mul(wi, e), we);
}

std::strong_ordering compare(const RingElemD& lhs, const RingElemD& rhs) {
    if (auto c = compare(lhs.u(), rhs.u()); c != 0) return c;
    return compare(lhs.v(), rhs.v());
}

RingElemD ring_project(const RingElemP& e) {
    const std::uint32_t p = e.modulus();
    std::vector<std::pair<Monomial, std::int64_t>> u, v;
    for (const RingTerm& t : ring_terms(e)) {
        DElement d = project_dihedral(t.g);
        auto& dst = d.flip ? v : u;
        dst.emplace_back(Monomial{0, 0, d.n}, static_cast<std::int64_t>(t.c));
    }
    return RingElemD(LaurentPoly::from_terms(p, std::move(u)),
                     LaurentPoly::from_terms(p, std::move(v)));
}

std::string to_string(const RingElemD& e) {
    std::string out;
    if (!e.u().is_zero()) out += '(' + to_string_dihedral(e.u()) + ')';
    if (!e.v().is_zero()) {
        if (!out.empty()) out += " + ";
        out += '(' + to_string_dihedral(e.v()) + ")*b";
    }
    return out.empty() ? "0" : out;
}

}  // namespace hwring
