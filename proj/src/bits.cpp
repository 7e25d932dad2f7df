#include "ramlift/bits.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ramlift {

BitSource::BitSource(const SeedBytes& seed, unsigned field_degree, unsigned k)
    : field_(field_degree), k_(k) {
    if (k_ < 1) throw std::invalid_argument("k must be at least 1");
    const unsigned m = field_.degree();
    if (seed.size() * 8 < 2 * m)
        throw std::invalid_argument("seed too short: need at least 2m bits");
    for (unsigned i = 0; i < m; ++i) {
        x_ = (x_ << 1) | static_cast<std::uint64_t>(seed_bit(seed, i));
        y_ = (y_ << 1) | static_cast<std::uint64_t>(seed_bit(seed, m + i));
    }
}

BitSource::BitSource(unsigned field_degree, std::uint64_t x, std::uint64_t y, unsigned k)
    : field_(field_degree), x_(x & field_.element_mask()), y_(y & field_.element_mask()), k_(k) {
    if (k_ < 1) throw std::invalid_argument("k must be at least 1");
}

std::uint64_t BitSource::max_length() const {
    return field_.element_mask();  // nonzero elements: 2^m - 1
}

double BitSource::claimed_delta() const {
    return std::ldexp(static_cast<double>(k_ - 1), -static_cast<int>(field_.degree()));
}

int BitSource::sign_at(std::uint64_t i) const {
    if (i >= max_length()) throw std::out_of_range("bit index beyond 2^m - 1");
    const std::uint64_t b = i + 1;  // i-th nonzero field element
    const std::uint64_t g = field_.mul(x_, b);
    std::uint64_t acc = 0, term = 1;
    for (unsigned j = 0; j < k_; ++j) {
        acc ^= term;
        term = field_.mul(term, g);
    }
    const int bit = std::popcount(acc & y_) & 1;
    return bit ? -1 : +1;
}

std::vector<int> BitSource::signs(std::uint64_t n) const {
    if (n > max_length()) throw std::out_of_range("requested more bits than 2^m - 1");
    std::vector<int> out(n);
    for (std::uint64_t i = 0; i < n; ++i) out[i] = sign_at(i);
    return out;
}

SignSource SignSource::uniform_hash(const SeedBytes& seed) {
    SignSource s;
    s.hash_key_ = fold_seed(seed, "sign-stream");
    return s;
}

SignSource SignSource::small_bias(const SeedBytes& seed, unsigned field_degree, unsigned k) {
    SignSource s;
    s.bits_.emplace(seed, field_degree, k);
    return s;
}

int SignSource::at(std::uint64_t i) const {
    int v;
    if (bits_) {
        v = bits_->sign_at(i);
    } else {
        const std::uint64_t z = mix64(hash_key_ ^ (0x9e3779b97f4a7c15ull * (i + 1)));
        v = (std::popcount(z) & 1) ? -1 : +1;
    }
    if (flip_index_ && *flip_index_ == i) v = -v;
    return v;
}

SignSource SignSource::with_flipped_index(std::uint64_t index) const {
    SignSource s = *this;
    s.flip_index_ = index;
    return s;
}

} // namespace ramlift
