#include "ramlift/gf2m.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace ramlift::gf2 {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u128 clmul(u64 a, u64 b) {
    u128 acc = 0;
    while (b) {
        acc ^= static_cast<u128>(a) << std::countr_zero(b);
        b &= b - 1;
    }
    return acc;
}

int poly_degree(u128 p) {
    if (p == 0) return -1;
    u64 hi = static_cast<u64>(p >> 64);
    if (hi) return 63 + std::bit_width(hi);
    return std::bit_width(static_cast<u64>(p)) - 1;
}

u128 poly_mod(u128 a, u128 mod) {
    const int dm = poly_degree(mod);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a))
        a ^= mod << (da - dm);
    return a;
}

u128 poly_gcd(u128 a, u128 b) {
    while (b != 0) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

u64 mulmod(u64 a, u64 b, u128 mod) {
    return static_cast<u64>(poly_mod(clmul(a, b), mod));
}

} // namespace

bool is_irreducible(unsigned deg, std::uint64_t tail) {
    if (deg < 2 || deg > 64) return false;
    if ((tail & 1) == 0) return false;  // divisible by x
    const u128 p = (static_cast<u128>(1) << deg) | tail;

    // x^(2^deg) == x (mod p)
    u64 t = 2;
    for (unsigned i = 0; i < deg; ++i) t = mulmod(t, t, p);
    if (t != 2) return false;

    // gcd(x^(2^(deg/q)) - x, p) == 1 for every prime q | deg
    unsigned rest = deg;
    for (unsigned q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        u64 s = 2;
        for (unsigned i = 0; i < deg / q; ++i) s = mulmod(s, s, p);
        if (poly_gcd(s ^ 2u, p) != 1) return false;
    }
    return true;
}

std::uint64_t smallest_irreducible_tail(unsigned deg) {
    if (deg < 2 || deg > 64)
        throw std::invalid_argument("field degree must be in [2, 64]");
    for (u64 tail = 1;; tail += 2) {
        if (is_irreducible(deg, tail)) return tail;
        if (deg < 64 && tail >= (u64{1} << deg))
            throw std::logic_error("no irreducible polynomial found");
    }
}

Field::Field(unsigned degree)
    : m_(degree),
      tail_(smallest_irreducible_tail(degree)),
      mask_(degree == 64 ? ~u64{0} : (u64{1} << degree) - 1) {}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    const u128 mod = (static_cast<u128>(1) << m_) | tail_;
    return mulmod(a & mask_, b & mask_, mod);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    u64 r = 1;
    u64 base = a & mask_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

} // namespace ramlift::gf2
