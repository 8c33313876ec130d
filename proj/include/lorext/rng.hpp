#pragma once

#include <complex>
#include <cstdint>

namespace lorext {

/// Counter-based pseudo-random generator built on the SplitMix64 finalizer.
///
/// The i-th output of stream (seed, stream_id) is
///   mix(mix(seed ^ mix(stream_id + GOLDEN)) + i * GOLDEN)
/// with GOLDEN = 0x9E3779B97F4A7C15 and mix the standard SplitMix64
/// finalizer.  The formula is stable across platforms and languages, so
/// seeds in suite reports are portable.
class CounterRng {
public:
    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream_id = 0)
        : key_(mix(seed ^ mix(stream_id + golden))) {}

    /// Derived generator for an independent substream.
    CounterRng substream(std::uint64_t stream_id) const {
        CounterRng r(0);
        r.key_ = mix(key_ ^ mix(stream_id + golden));
        r.counter_ = 0;
        return r;
    }

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * golden); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller; two uniforms per call, no cached spare.
    double normal();

    /// Unit-modulus complex number with uniform phase.
    std::complex<double> unit_phase();

    /// Standard complex normal (independent N(0,1) parts).
    std::complex<double> complex_normal() { return {normal(), normal()}; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace lorext
