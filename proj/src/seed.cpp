#include "ramlift/seed.hpp"

#include <stdexcept>

namespace ramlift {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t z) {
    std::uint64_t s = z;
    return splitmix64(s);
}

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

SeedBytes parse_hex_seed(std::string_view hex) {
    if (hex.substr(0, 2) == "0x" || hex.substr(0, 2) == "0X") hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty hex seed");
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex seed needs an even number of digits");
    SeedBytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit in seed");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::string seed_to_hex(const SeedBytes& seed) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * seed.size());
    for (std::uint8_t b : seed) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::uint64_t fold_seed(const SeedBytes& seed, std::string_view label, std::uint64_t index) {
    // FNV-1a over seed bytes, a separator, the label, and the index.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto eat = [&h](std::uint8_t b) {
        h ^= b;
        h *= 0x100000001b3ull;
    };
    for (std::uint8_t b : seed) eat(b);
    eat(0xff);
    for (char c : label) eat(static_cast<std::uint8_t>(c));
    eat(0xfe);
    for (int i = 0; i < 8; ++i) eat(static_cast<std::uint8_t>(index >> (8 * i)));
    return mix64(h);
}

SeedBytes derive_seed(const SeedBytes& master, std::string_view label,
                      std::uint64_t index, std::size_t nbytes) {
    std::uint64_t state = fold_seed(master, label, index);
    SeedBytes out(nbytes);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        if (i % 8 == 0) word = splitmix64(state);
        out[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
    }
    return out;
}

} // namespace ramlift
