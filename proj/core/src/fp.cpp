#include "hwring/fp.hpp"

#include <stdexcept>

namespace hwring {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
}

namespace fp {

std::uint32_t normalize(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint32_t acc = 1 % p;
    std::uint32_t b = base % p;
    while (exp != 0) {
        if (exp & 1) acc = mul(acc, b, p);
        b = mul(b, b, p);
        exp >>= 1;
    }
    return acc;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw zero_element("no inverse: zero residue mod " + std::to_string(p));
    return pow(a, p - 2, p);  // Fermat; p is prime
}

}  // namespace fp

Coeff::Coeff(std::int64_t v, std::uint32_t modulus) : p(modulus) {
    require_prime(modulus);
    value = fp::normalize(v, modulus);
}

namespace {
void check_same(const Coeff& a, const Coeff& b) {
    if (a.p != b.p) throw modulus_mismatch(a.p, b.p);
}
}  // namespace

Coeff operator+(Coeff a, Coeff b) {
    check_same(a, b);
    return Coeff(fp::add(a.value, b.value, a.p), a.p);
}

Coeff operator-(Coeff a, Coeff b) {
    check_same(a, b);
    return Coeff(fp::sub(a.value, b.value, a.p), a.p);
}

Coeff operator*(Coeff a, Coeff b) {
    check_same(a, b);
    return Coeff(fp::mul(a.value, b.value, a.p), a.p);
}

Coeff inverse(Coeff a) {
    return Coeff(fp::inv(a.value, a.p), a.p);
}

}  // namespace hwring
