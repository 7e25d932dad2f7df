#include "ramlift/permutation.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ramlift {

namespace {

// Rejection-sampled bounded draw; keeps results identical on every platform.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        const std::uint64_t r = splitmix64(state);
        if (r < limit) return r % n;
    }
}

} // namespace

PermutationFamily::PermutationFamily(const SeedBytes& seed, std::uint64_t domain, Mode mode)
    : domain_(domain), mode_(mode) {
    if (domain_ == 0) throw std::invalid_argument("permutation domain must be nonempty");
    if (mode_ == Mode::shuffled) {
        if (domain_ > (std::uint64_t{1} << 32))
            throw std::invalid_argument("shuffled mode supports domains up to 2^32");
        fwd_.resize(domain_);
        std::iota(fwd_.begin(), fwd_.end(), 0u);
        std::uint64_t state = fold_seed(seed, "perm-shuffle");
        for (std::uint64_t i = domain_ - 1; i > 0; --i) {
            const std::uint64_t j = bounded(state, i + 1);
            std::swap(fwd_[i], fwd_[j]);
        }
        inv_.resize(domain_);
        for (std::uint64_t i = 0; i < domain_; ++i) inv_[fwd_[i]] = static_cast<std::uint32_t>(i);
    } else {
        const unsigned bits = std::max<unsigned>(2, std::bit_width(domain_ - 1));
        half_bits_ = (bits + 1) / 2;
        half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
        for (int r = 0; r < kRounds; ++r)
            round_keys_[r] = fold_seed(seed, "feistel-round", static_cast<std::uint64_t>(r));
    }
}

PermutationFamily PermutationFamily::identity(std::uint64_t domain) {
    PermutationFamily p(SeedBytes{0}, domain, Mode::shuffled);
    std::iota(p.fwd_.begin(), p.fwd_.end(), 0u);
    std::iota(p.inv_.begin(), p.inv_.end(), 0u);
    return p;
}

std::uint64_t PermutationFamily::encrypt_raw(std::uint64_t v) const {
    std::uint64_t left = v >> half_bits_;
    std::uint64_t right = v & half_mask_;
    for (int r = 0; r < kRounds; ++r) {
        const std::uint64_t f = mix64(right ^ round_keys_[r]) & half_mask_;
        const std::uint64_t next = left ^ f;
        left = right;
        right = next;
    }
    return (left << half_bits_) | right;
}

std::uint64_t PermutationFamily::decrypt_raw(std::uint64_t v) const {
    std::uint64_t left = v >> half_bits_;
    std::uint64_t right = v & half_mask_;
    for (int r = kRounds - 1; r >= 0; --r) {
        const std::uint64_t prev = right ^ (mix64(left ^ round_keys_[r]) & half_mask_);
        right = left;
        left = prev;
    }
    return (left << half_bits_) | right;
}

std::uint64_t PermutationFamily::forward(std::uint64_t i) const {
    if (i >= domain_) throw std::out_of_range("permutation index out of range");
    if (mode_ == Mode::shuffled) return fwd_[i];
    std::uint64_t v = encrypt_raw(i);
    while (v >= domain_) v = encrypt_raw(v);  // cycle walking
    return v;
}

std::uint64_t PermutationFamily::inverse(std::uint64_t i) const {
    if (i >= domain_) throw std::out_of_range("permutation index out of range");
    if (mode_ == Mode::shuffled) return inv_[i];
    std::uint64_t v = decrypt_raw(i);
    while (v >= domain_) v = decrypt_raw(v);
    return v;
}

} // namespace ramlift
