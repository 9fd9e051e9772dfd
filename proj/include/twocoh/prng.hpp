#pragma once

#include <cstdint>

namespace twocoh {

/// SplitMix64: tiny splittable PRNG with a portable, fully specified output
/// sequence (Steele–Lea–Flood's mix function). Used for every seeded sampling
/// decision in the library so that reports are reproducible bit-for-bit on any
/// platform. The standard library is deliberately avoided here: its engines are
/// portable but its distributions are not, and none of its engines split.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream; advancing the child never touches the parent.
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

    /// Uniform-ish draw in [0, bound). Plain modulo: the bias is irrelevant at
    /// the sizes used here and the result is identical on every platform.
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    /// Draw in the inclusive integer range [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace twocoh
