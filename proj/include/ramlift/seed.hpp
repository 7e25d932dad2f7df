#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ramlift {

// Seeds are byte strings, written as hex on the command line and in reports.
using SeedBytes = std::vector<std::uint8_t>;

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix64(std::uint64_t z);

SeedBytes parse_hex_seed(std::string_view hex);
std::string seed_to_hex(const SeedBytes& seed);

// 64-bit digest of (seed, label, index); the basis of all sub-seed derivation.
std::uint64_t fold_seed(const SeedBytes& seed, std::string_view label,
                        std::uint64_t index = 0);

// Deterministic named sub-seed of a master seed.
SeedBytes derive_seed(const SeedBytes& master, std::string_view label,
                      std::uint64_t index = 0, std::size_t nbytes = 16);

// Bit i of a byte string, MSB-first within each byte.
inline int seed_bit(const SeedBytes& s, std::size_t i) {
    return (s[i >> 3] >> (7 - (i & 7))) & 1;
}

} // namespace ramlift
