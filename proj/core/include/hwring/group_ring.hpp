#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hwring/group.hpp"
#include "hwring/laurent.hpp"

namespace hwring {

/// Element of K[P] in the unique form p + q.a + r.b + s.ab with p, q, r, s
/// Laurent polynomials in x, y, z.  Construction rejects components with odd
/// v- or w-exponents; half-exponent polynomials live only in the symmetric
/// quadruples of the units layer.
class RingElemP {
public:
    explicit RingElemP(std::uint32_t modulus = 2);
    RingElemP(LaurentPoly one, LaurentPoly a, LaurentPoly b, LaurentPoly ab);

    static RingElemP zero(std::uint32_t modulus);
    static RingElemP identity(std::uint32_t modulus);
    static RingElemP scalar(std::uint32_t modulus, std::int64_t value);
    static RingElemP group_element(std::uint32_t modulus, const PElement& g,
                                   std::int64_t coeff = 1);

    std::uint32_t modulus() const { return comps_[0].modulus(); }
    const LaurentPoly& part(QElement g) const { return comps_[q_index(g)]; }
    const std::array<LaurentPoly, 4>& parts() const { return comps_; }
    bool is_zero() const;

    friend bool operator==(const RingElemP&, const RingElemP&) = default;

private:
    std::array<LaurentPoly, 4> comps_;  // indexed 1, a, b, ab
};

/// One structured-formula product step on raw component quadruples, with the
/// LEFT factor in the primed role.  The ring is noncommutative and the four
/// component formulas are side-sensitive, so callers must not swap operands.
/// Exposed separately from RingElemP so that the expression evaluator can
/// multiply intermediate values whose components still carry half exponents.
std::array<LaurentPoly, 4> component_mul(const std::array<LaurentPoly, 4>& lhs,
                                         const std::array<LaurentPoly, 4>& rhs);

/// Product via the four component formulas (left factor primed).
RingElemP rp_mul(const RingElemP& lhs, const RingElemP& rhs);

/// Independent oracle: expand both factors into coefficient-weighted group
/// elements, multiply every pair with p_mul and re-collect.  Shares no code
/// path with the component formulas beyond LaurentPoly primitives.
RingElemP rp_mul_convolution(const RingElemP& lhs, const RingElemP& rhs);

RingElemP rp_add(const RingElemP& lhs, const RingElemP& rhs);
RingElemP rp_sub(const RingElemP& lhs, const RingElemP& rhs);
RingElemP rp_neg(const RingElemP& e);

inline RingElemP operator*(const RingElemP& a, const RingElemP& b) { return rp_mul(a, b); }
inline RingElemP operator+(const RingElemP& a, const RingElemP& b) { return rp_add(a, b); }
inline RingElemP operator-(const RingElemP& a, const RingElemP& b) { return rp_sub(a, b); }

struct RingTerm {
    PElement g{};
    std::uint32_t c{0};

    friend bool operator==(const RingTerm&, const RingTerm&) = default;
};

/// All group elements with nonzero coefficient, sorted by (m, n, k, g).
std::vector<RingTerm> ring_terms(const RingElemP& e);
std::vector<PElement> support(const RingElemP& e);

/// Sum of all coefficients; a ring homomorphism onto F_p.
Coeff augmentation(const RingElemP& e);

/// True iff the support is a single group element.
bool is_trivial_unit(const RingElemP& e);

/// Exact inverse of a trivial unit c.g, namely c^-1.g^-1.
/// Throws zero_element unless the support has exactly one element.
RingElemP trivial_unit_inverse(const RingElemP& e);

/// w^-1 . e . w
RingElemP conjugate(const RingElemP& e, const PElement& w);

/// One-sided translate left . e . right.
RingElemP translate(const PElement& left, const RingElemP& e, const PElement& right);

std::string to_string(const RingElemP& e);

// ---------------------------------------------------------------------------
// K[D] for the infinite dihedral group: u(t) + v(t).b with single-variable
// Laurent polynomials stored in the z slot.
// ---------------------------------------------------------------------------

class RingElemD {
public:
    explicit RingElemD(std::uint32_t modulus = 2);
    RingElemD(LaurentPoly u, LaurentPoly v);

    static RingElemD zero(std::uint32_t modulus);
    static RingElemD identity(std::uint32_t modulus);
    static RingElemD group_element(std::uint32_t modulus, DElement d, std::int64_t coeff = 1);

    std::uint32_t modulus() const { return u_.modulus(); }
    const LaurentPoly& u() const { return u_; }
    const LaurentPoly& v() const { return v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    friend bool operator==(const RingElemD&, const RingElemD&) = default;

private:
    LaurentPoly u_, v_;
};

/// (u1 + v1 b)(u2 + v2 b) = (u1 u2 + v1 v2*) + (u1 v2 + v1 u2*) b, where
/// f*(t) = f(t^-1).
RingElemD rd_mul(const RingElemD& lhs, const RingElemD& rhs);
RingElemD rd_add(const RingElemD& lhs, const RingElemD& rhs);
RingElemD rd_conjugate(const RingElemD& e, DElement w);

inline RingElemD operator*(const RingElemD& a, const RingElemD& b) { return rd_mul(a, b); }
inline RingElemD operator+(const RingElemD& a, const RingElemD& b) { return rd_add(a, b); }

/// Total order for deterministic containers.
std::strong_ordering compare(const RingElemD& lhs, const RingElemD& rhs);
inline bool operator<(const RingElemD& a, const RingElemD& b) {
    return compare(a, b) == std::strong_ordering::less;
}

/// Linear extension of project_dihedral; a ring homomorphism K[P] -> K[D].
RingElemD ring_project(const RingElemP& e);

std::string to_string(const RingElemD& e);

}  // namespace hwring
