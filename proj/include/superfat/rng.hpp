#pragma once

#include <cstdint>
#include <random>

namespace superfat {

/// Deterministic random source.
///
/// Every randomized routine in the library draws from this wrapper so that a
/// (seed, call-sequence) pair reproduces the same stream on every platform:
/// values are derived from raw mt19937_64 output with explicit modular
/// reduction instead of std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Raw 64-bit draw.
    std::uint64_t next() { return gen_(); }

    /// Uniform integer in [lo, hi] (both inclusive).  Requires lo <= hi.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    /// Uniform integer in [-bound, bound] \ {0}.  Requires bound >= 1.
    std::int64_t nonzero_int(std::int64_t bound) {
        for (;;) {
            const std::int64_t v = uniform_int(-bound, bound);
            if (v != 0) return v;
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace superfat
