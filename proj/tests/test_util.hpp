#pragma once

#include <cstdint>

// Small deterministic generator so expected values are reproducible across
// platforms; no std::rand anywhere in the tests.
struct XorShift {
    std::uint64_t s;
    explicit XorShift(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};
