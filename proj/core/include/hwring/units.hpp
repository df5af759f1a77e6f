#pragma once

#include <cstdint>
#include <string>

#include "hwring/group_ring.hpp"

namespace hwring {

/// Four Laurent polynomials in v, w, z (half exponents allowed), each meant
/// to be invariant under the ab-action x -> x^-1, y -> y^-1, z -> z.  They
/// are the rescaled components p0 = v^-1 w^-1 p, q0 = w q, r0 = v^-1 r,
/// s0 = s of a ring element p + q.a + r.b + s.ab.
struct SymmetricQuadruple {
    LaurentPoly p0, q0, r0, s0;

    std::uint32_t modulus() const { return p0.modulus(); }
};

struct LemmaCheck {
    bool ab_invariant{false};
    bool eq1_holds{false};
    bool eq2_holds{false};

    bool all() const { return ab_invariant && eq1_holds && eq2_holds; }
};

/// Evaluates, exactly and independently:
///   ab-invariance of all four polynomials,
///   (1)  p0^a s0 - q0 r0^a + z^-1 (p0^a s0 - q0 r0^a)^a = 0,
///   (2)  p0 p0^a - q0 q0^a - r0 r0^a + s0 s0^a = 1.
LemmaCheck check_lemma_criterion(const SymmetricQuadruple& sq);

enum class CertMethod { lemma_construction, adjugate, external };

std::string to_string(CertMethod m);

/// A unit together with its inverse, verified on BOTH sides at construction.
/// The one-sided shortcut (checking alpha' alpha = 1 only) would lean on the
/// absence of zero divisors, which this library does not assume.
struct UnitCertificate {
    RingElemP alpha;
    RingElemP alpha_inv;
    CertMethod method{CertMethod::external};
};

/// Verifies both products equal 1; throws verification_failed otherwise.
UnitCertificate make_certificate(RingElemP alpha, RingElemP alpha_inv, CertMethod method);

/// Recovers p = v w p0, q = w^-1 q0, r = v r0, s = s0, forms
/// alpha = p + q.a + r.b + s.ab and the inverse candidate
/// alpha' = x^-1 p^a - x^-1 q.a - y^-1 r.b + z^-1 s^a.ab, and certifies the
/// pair.  Signs are carried exactly so the same path is valid for odd p.
/// Throws criterion_failed, parity_violation or verification_failed.
UnitCertificate build_unit_from_symmetric(const SymmetricQuadruple& sq);

/// The fixed symmetric quadruple
///   p0 = vbar wbar (1 + z^-1)
///   q0 = v^-2 w^-1 + v^2 w + wbar z
///   r0 = vbar + (v^-1 w^-2 + v w^2) z
///   s0 = 1 + (vbar^2 + wbar^2) z^-1
/// with vbar = v^-1 + v, wbar = w^-1 + w, over the given prime field.
SymmetricQuadruple counterexample_quadruple(std::uint32_t modulus = 2);

/// The non-trivial unit of F_2[P] built from counterexample_quadruple,
/// with support sizes 21 and 21.
UnitCertificate counterexample();

/// Exponent substitution v -> v^(2k+1) applied to all four polynomials.
SymmetricQuadruple stretch(const SymmetricQuadruple& sq, std::int64_t k);

/// The family obtained from the counterexample quadruple by stretch(k);
/// family_alpha(0) is counterexample().
UnitCertificate family_alpha(std::int64_t k);

}  // namespace hwring
