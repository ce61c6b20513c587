#pragma once

#include <algorithm>
#include <cstdint>

namespace dyckham {

// Resource counters attached to every verdict. max_live_bytes tracks the
// logical working-state footprint (field accumulators, stacks, seeds,
// cursor windows), polled at item boundaries; it excludes the input except
// for the one block / one item the algorithm is allowed to buffer.
struct Meter {
    std::uint64_t randomness_bits = 0;
    std::uint64_t max_live_bytes = 0;
    std::uint64_t items = 0;
    std::uint64_t postprocess_steps = 0;

    void note_live(std::uint64_t bytes) {
        max_live_bytes = std::max(max_live_bytes, bytes);
    }

    Meter& operator+=(const Meter& o) {
        randomness_bits += o.randomness_bits;
        max_live_bytes = std::max(max_live_bytes, o.max_live_bytes);
        items += o.items;
        postprocess_steps += o.postprocess_steps;
        return *this;
    }
};

} // namespace dyckham
