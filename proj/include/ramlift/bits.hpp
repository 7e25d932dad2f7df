#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramlift/gf2m.hpp"
#include "ramlift/seed.hpp"

namespace ramlift {

// Small-bias sign source over GF(2^m) in the powering style.  The seed is two
// field elements x, y; output i is the GF(2) inner product of y with
// sum_{j<k} (x*b_i)^j, where b_i is the field element with integer value i+1.
//
// For any index set S with 1 <= |S| <= k, the character sum over S equals
// <q_S(x), y> for a nonzero polynomial q_S of degree < k (Vandermonde
// argument on the power sums of the b_i), so averaging over all seeds gives
// |bias| <= (k-1)/2^m.  Single bits are exactly unbiased.
class BitSource {
public:
    BitSource(const SeedBytes& seed, unsigned field_degree, unsigned k);
    // Direct element-level constructor (used by exhaustive seed-space scans).
    BitSource(unsigned field_degree, std::uint64_t x, std::uint64_t y, unsigned k);

    int sign_at(std::uint64_t i) const;             // +1 or -1
    std::vector<int> signs(std::uint64_t n) const;  // first n signs

    std::uint64_t max_length() const;               // 2^m - 1 indices
    double claimed_delta() const;                   // (k-1)/2^m
    unsigned k() const { return k_; }
    unsigned field_degree() const { return field_.degree(); }
    bool weak_seed() const { return y_ == 0; }      // constant output
    std::uint64_t seed_x() const { return x_; }
    std::uint64_t seed_y() const { return y_; }

private:
    gf2::Field field_;
    std::uint64_t x_ = 0;
    std::uint64_t y_ = 0;
    unsigned k_;
};

// Per-index +-1 stream: either a seeded hash (stands in for truly uniform
// signs) or a small-bias BitSource exercising the derandomized regime.
class SignSource {
public:
    static SignSource uniform_hash(const SeedBytes& seed);
    static SignSource small_bias(const SeedBytes& seed, unsigned field_degree, unsigned k);

    int at(std::uint64_t i) const;
    bool is_small_bias() const { return bits_.has_value(); }

    // Returns a copy whose stream differs from this one exactly at `index`
    // (sign flipped there); used for sensitivity experiments.
    SignSource with_flipped_index(std::uint64_t index) const;

private:
    SignSource() = default;
    std::optional<BitSource> bits_;
    std::uint64_t hash_key_ = 0;
    std::optional<std::uint64_t> flip_index_;
};

} // namespace ramlift
