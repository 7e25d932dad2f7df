#pragma once

#include <cstdint>

namespace ramlift::gf2 {

// Irreducibility of x^deg + tail over GF(2) (Rabin's test).
bool is_irreducible(unsigned deg, std::uint64_t tail);

// Low-order coefficients of the lexicographically smallest irreducible
// polynomial of the given degree (the x^deg term is implicit).
std::uint64_t smallest_irreducible_tail(unsigned deg);

// Binary field GF(2^m), 2 <= m <= 64.  Elements are polynomials over GF(2)
// packed into the low m bits of a word; reduction is by the smallest
// irreducible polynomial of degree m, found at construction.
class Field {
public:
    explicit Field(unsigned degree);

    unsigned degree() const { return m_; }
    std::uint64_t element_mask() const { return mask_; }
    std::uint64_t modulus_tail() const { return tail_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

private:
    unsigned m_;
    std::uint64_t tail_;
    std::uint64_t mask_;
};

} // namespace ramlift::gf2
