#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hwring/errors.hpp"
#include "hwring/fp.hpp"
#include "hwring/group.hpp"

namespace hwring {

/// Exponents of v, w, z.  v and w are square roots of x and y, so the
/// x-exponent of a monomial is i/2 and the y-exponent is j/2; elements of the
/// integral lattice K[x^±, y^±, z^±] are exactly those with even i and j.
struct Monomial {
    std::int64_t i{0};
    std::int64_t j{0};
    std::int64_t k{0};

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
    Monomial m{};
    std::uint32_t c{0};

    friend constexpr bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial over F_p in v, w, z, kept in canonical form:
/// terms sorted lexicographically by (i, j, k), no zero coefficients.
class LaurentPoly {
public:
    explicit LaurentPoly(std::uint32_t modulus = 2);

    static LaurentPoly zero(std::uint32_t modulus);
    static LaurentPoly one(std::uint32_t modulus);
    static LaurentPoly term(std::uint32_t modulus, Monomial m, std::int64_t coeff);

    /// Folds duplicate monomials and drops zero coefficients.
    static LaurentPoly from_terms(std::uint32_t modulus,
                                  std::vector<std::pair<Monomial, std::int64_t>> entries);

    std::uint32_t modulus() const { return modulus_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t coeff(const Monomial& m) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::uint32_t modulus_;
    std::vector<Term> terms_;

    friend LaurentPoly poly_add(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly poly_neg(const LaurentPoly&);
    friend LaurentPoly poly_mul(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly apply_action(const LaurentPoly&, QElement);
    friend LaurentPoly stretch_v(const LaurentPoly&, std::int64_t);
    friend LaurentPoly scale(const LaurentPoly&, std::int64_t);
};

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly poly_sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly poly_neg(const LaurentPoly& f);
LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g);

inline LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) { return poly_add(f, g); }
inline LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return poly_sub(f, g); }
inline LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return poly_mul(f, g); }
inline LaurentPoly operator-(const LaurentPoly& f) { return poly_neg(f); }

/// Exponent action of Q: a negates (j, k), b negates (i, k), ab negates
/// (i, j).  Coefficients are untouched.  A ring automorphism.
LaurentPoly apply_action(const LaurentPoly& f, QElement g);

/// True iff f is a single term (a nonzero scalar times a monomial), i.e. a
/// unit of the Laurent ring.
bool poly_is_ring_unit(const LaurentPoly& f);

/// True iff every v- and w-exponent is even, i.e. f lies in K[x^±, y^±, z^±].
bool has_even_vw(const LaurentPoly& f);

/// Monomial substitution v -> v^factor (and w fixed); factor must be odd for
/// the substitutions used here but any nonzero factor is accepted.
LaurentPoly stretch_v(const LaurentPoly& f, std::int64_t factor);

LaurentPoly scale(const LaurentPoly& f, std::int64_t c);

/// Total order extending equality; used for deterministic map keys.
std::strong_ordering compare(const LaurentPoly& f, const LaurentPoly& g);

/// Canonical text: terms in ascending (i, j, k) order joined by " + ", with
/// even exponents rendered through x = v^2 and y = w^2.
std::string to_string(const LaurentPoly& f);

/// Same polynomial printed in the single variable t (the z slot); requires
/// i = j = 0 throughout.
std::string to_string_dihedral(const LaurentPoly& f);

}  // namespace hwring
