#pragma once

#include <cstdint>
#include <vector>

#include "ramlift/seed.hpp"

namespace ramlift {

// Seeded bijection on [0, domain).  Two interchangeable backends:
//   shuffled - a materialized Fisher-Yates shuffle of the whole domain,
//              the desk-scale stand-in for a truly uniform permutation;
//   feistel  - a fixed-round balanced Feistel network with cycle walking,
//              giving O(1) per-element forward/inverse evaluation.
class PermutationFamily {
public:
    enum class Mode { shuffled, feistel };

    PermutationFamily(const SeedBytes& seed, std::uint64_t domain, Mode mode = Mode::shuffled);

    static PermutationFamily identity(std::uint64_t domain);

    std::uint64_t forward(std::uint64_t i) const;
    std::uint64_t inverse(std::uint64_t i) const;
    std::uint64_t domain() const { return domain_; }
    Mode mode() const { return mode_; }

private:
    static constexpr int kRounds = 8;

    std::uint64_t encrypt_raw(std::uint64_t v) const;
    std::uint64_t decrypt_raw(std::uint64_t v) const;

    std::uint64_t domain_;
    Mode mode_;
    // shuffled backend
    std::vector<std::uint32_t> fwd_, inv_;
    // feistel backend
    unsigned half_bits_ = 0;
    std::uint64_t half_mask_ = 0;
    std::uint64_t round_keys_[kRounds] = {};
};

} // namespace ramlift
