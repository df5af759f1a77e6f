#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hwring {

/// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands carry different coefficient moduli.
class modulus_mismatch : public error {
public:
    modulus_mismatch(std::uint32_t lhs, std::uint32_t rhs)
        : error("modulus mismatch: F_" + std::to_string(lhs) + " vs F_" + std::to_string(rhs)) {}
};

/// A group word contains a character outside {a, b, A, B}.
class bad_letter : public error {
public:
    bad_letter(char letter, std::size_t position)
        : error("bad letter '" + std::string(1, letter) + "' at position " + std::to_string(position)),
          letter(letter),
          position(position) {}

    char letter;
    std::size_t position;
};

/// Expression text does not conform to the grammar.  `position` is a 0-based
/// byte offset into the input.
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), position(position) {}

    std::size_t position;
};

/// A component polynomial has an odd exponent of v or w, so the element lies
/// outside the integral x,y,z lattice.
class odd_half_exponent : public error {
public:
    using error::error;
};

class criterion_failed : public error {
public:
    using error::error;
};

class parity_violation : public error {
public:
    using error::error;
};

class verification_failed : public error {
public:
    using error::error;
};

class zero_element : public error {
public:
    using error::error;
};

/// The adjugate-derived inverse failed round-trip verification.  Reported
/// loudly, never silently accepted.
class inverse_outside_image : public error {
public:
    using error::error;
};

class bad_index : public error {
public:
    using error::error;
};

class not_involution : public error {
public:
    using error::error;
};

class empty_input : public error {
public:
    using error::error;
};

/// The search space exceeds the configured budget.  Carries the exact
/// cardinality that was computed up-front.
class budget_exceeded : public error {
public:
    budget_exceeded(std::uint64_t cardinality, std::uint64_t budget)
        : error("search space of " + std::to_string(cardinality) +
                " candidates exceeds budget " + std::to_string(budget)),
          cardinality(cardinality),
          budget(budget) {}

    std::uint64_t cardinality;
    std::uint64_t budget;
};

}  // namespace hwring
