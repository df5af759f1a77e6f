#include "hwring/units.hpp"

namespace hwring {

namespace {

LaurentPoly mono(std::uint32_t p, std::int64_t i, std::int64_t j, std::int64_t k,
                 std::int64_t c = 1) {
    return LaurentPoly::term(p, Monomial{i, j, k}, c);
}

}  // namespace

LemmaCheck check_lemma_criterion(const SymmetricQuadruple& sq) {
    LemmaCheck out;
    const std::uint32_t p = sq.modulus();

    auto inv_ab = [](const LaurentPoly& f) { return apply_action(f, q_ab) == f; };
    out.ab_invariant = inv_ab(sq.p0) && inv_ab(sq.q0) && inv_ab(sq.r0) && inv_ab(sq.s0);

    LaurentPoly xi = apply_action(sq.p0, q_a) * sq.s0 - sq.q0 * apply_action(sq.r0, q_a);
    LaurentPoly eq1 = xi + mono(p, 0, 0, -1) * apply_action(xi, q_a);
    out.eq1_holds = eq1.is_zero();

    LaurentPoly eq2 = sq.p0 * apply_action(sq.p0, q_a) - sq.q0 * apply_action(sq.q0, q_a) -
                      sq.r0 * apply_action(sq.r0, q_a) + sq.s0 * apply_action(sq.s0, q_a);
    out.eq2_holds = eq2 == LaurentPoly::one(p);

    return out;
}

std::string to_string(CertMethod m) {
    switch (m) {
        case CertMethod::lemma_construction: return "lemma-construction";
        case CertMethod::adjugate: return "adjugate";
        default: return "external";
    }
}

UnitCertificate make_certificate(RingElemP alpha, RingElemP alpha_inv, CertMethod method) {
    const RingElemP one = RingElemP::identity(alpha.modulus());
    if (rp_mul(alpha_inv, alpha) != one) {
        throw verification_failed("left product alpha_inv * alpha != 1");
    }
    if (rp_mul(alpha, alpha_inv) != one) {
        throw verification_failed("right product alpha * alpha_inv != 1");
    }
    return UnitCertificate{std::move(alpha), std::move(alpha_inv), method};
}

UnitCertificate build_unit_from_symmetric(const SymmetricQuadruple& sq) {
    LemmaCheck check = check_lemma_criterion(sq);
    if (!check.all()) {
        std::string what = "symmetric quadruple fails:";
        if (!check.ab_invariant) what += " ab-invariance";
        if (!check.eq1_holds) what += " eq1";
        if (!check.eq2_holds) what += " eq2";
        throw criterion_failed(what);
    }

    const std::uint32_t mod = sq.modulus();
    LaurentPoly p = mono(mod, 1, 1, 0) * sq.p0;
    LaurentPoly q = mono(mod, 0, -1, 0) * sq.q0;
    LaurentPoly r = mono(mod, 1, 0, 0) * sq.r0;
    LaurentPoly s = sq.s0;
    if (!has_even_vw(p) || !has_even_vw(q) || !has_even_vw(r) || !has_even_vw(s)) {
        throw parity_violation("recovered components are not integral in x, y");
    }

    LaurentPoly pi = mono(mod, -2, 0, 0) * apply_action(p, q_a);
    LaurentPoly qi = mono(mod, -2, 0, 0, -1) * q;
    LaurentPoly ri = mono(mod, 0, -2, 0, -1) * r;
    LaurentPoly si = mono(mod, 0, 0, -1) * apply_action(s, q_a);

    RingElemP alpha(std::move(p), std::move(q), std::move(r), std::move(s));
    RingElemP alpha_inv(std::move(pi), std::move(qi), std::move(ri), std::move(si));
    return make_certificate(std::move(alpha), std::move(alpha_inv),
                            CertMethod::lemma_construction);
}

SymmetricQuadruple counterexample_quadruple(std::uint32_t modulus) {
    const std::uint32_t p = modulus;
    LaurentPoly vbar = mono(p, -1, 0, 0) + mono(p, 1, 0, 0);
    LaurentPoly wbar = mono(p, 0, -1, 0) + mono(p, 0, 1, 0);
    LaurentPoly z = mono(p, 0, 0, 1);
    LaurentPoly zinv = mono(p, 0, 0, -1);
    LaurentPoly one = LaurentPoly::one(p);

    LaurentPoly p0 = vbar * wbar * (one + zinv);
    LaurentPoly q0 = mono(p, -2, -1, 0) + mono(p, 2, 1, 0) + wbar * z;
    LaurentPoly r0 = vbar + (mono(p, -1, -2, 0) + mono(p, 1, 2, 0)) * z;
    // The four-term form; it collapses to (vbar^2 + wbar^2) z^-1 only in
    // characteristic 2.
    LaurentPoly s0 = one + (mono(p, -2, 0, 0) + mono(p, 2, 0, 0) + mono(p, 0, -2, 0) +
                            mono(p, 0, 2, 0)) *
                               zinv;
    return SymmetricQuadruple{std::move(p0), std::move(q0), std::move(r0), std::move(s0)};
}

UnitCertificate counterexample() {
    return build_unit_from_symmetric(counterexample_quadruple(2));
}

SymmetricQuadruple stretch(const SymmetricQuadruple& sq, std::int64_t k) {
    const std::int64_t f = 2 * k + 1;
    return SymmetricQuadruple{stretch_v(sq.p0, f), stretch_v(sq.q0, f),
                              stretch_v(sq.r0, f), stretch_v(sq.s0, f)};
}

UnitCertificate family_alpha(std::int64_t k) {
    return build_unit_from_symmetric(stretch(counterexample_quadruple(2), k));
}

}  // namespace hwring
