#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyckham/errors.hpp"

namespace dyckham {

// Deterministic source of random bits with an exact consumption counter.
// The PRNG-backed variant never runs dry; the fixed-pool variant throws
// SourceExhausted, which lets tests drive algorithms with chosen bits.
class BitSource {
public:
    // splitmix64 stream; every algorithm seed in the project derives from one
    // 64-bit master seed through this construction.
    explicit BitSource(std::uint64_t seed) : state_(seed), unlimited_(true) {}

    static BitSource from_bits(std::vector<std::uint64_t> words, std::uint64_t nbits) {
        BitSource s(0);
        s.unlimited_ = false;
        s.pool_ = std::move(words);
        s.pool_bits_ = nbits;
        return s;
    }

    // Takes nbits <= 64, little-endian packed into the low bits.
    std::uint64_t take(unsigned nbits) {
        if (nbits == 0) return 0;
        std::uint64_t v = 0;
        for (unsigned got = 0; got < nbits;) {
            if (avail_ == 0) refill();
            unsigned grab = std::min<unsigned>(nbits - got, avail_);
            v |= (cur_ & mask(grab)) << got;
            cur_ >>= (grab == 64 ? 0 : grab);
            if (grab == 64) cur_ = 0;
            avail_ -= grab;
            got += grab;
        }
        consumed_ += nbits;
        return v & mask(nbits);
    }

    // Fills ceil(nbits/64) words, little-endian, top word masked.
    void take_words(std::uint64_t* out, std::uint64_t nbits) {
        std::uint64_t full = nbits / 64;
        for (std::uint64_t i = 0; i < full; ++i) out[i] = take(64);
        if (nbits % 64) out[full] = take(static_cast<unsigned>(nbits % 64));
    }

    std::uint64_t bits_consumed() const { return consumed_; }

private:
    static std::uint64_t mask(unsigned n) {
        return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
    }

    void refill() {
        if (unlimited_) {
            cur_ = splitmix64(state_);
            avail_ = 64;
        } else {
            if (pool_pos_ >= pool_bits_)
                throw Error(Errc::SourceExhausted, "bit source exhausted");
            std::uint64_t word = pool_[pool_pos_ / 64];
            unsigned off = static_cast<unsigned>(pool_pos_ % 64);
            cur_ = word >> off;
            avail_ = static_cast<unsigned>(std::min<std::uint64_t>(64 - off, pool_bits_ - pool_pos_));
            pool_pos_ += avail_;
        }
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    bool unlimited_ = true;
    std::uint64_t cur_ = 0;
    unsigned avail_ = 0;
    std::uint64_t consumed_ = 0;
    std::vector<std::uint64_t> pool_;
    std::uint64_t pool_bits_ = 0;
    std::uint64_t pool_pos_ = 0;
};

// Documented master-seed splitter: sub-source i of master seed s is
// BitSource(splitmix_mix(s ^ TAG_i)). Tags are fixed per subalgorithm so
// replays are stable across runs and platforms.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    std::uint64_t x = master ^ (tag * 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace dyckham
