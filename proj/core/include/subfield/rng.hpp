#ifndef SUBFIELD_RNG_HPP
#define SUBFIELD_RNG_HPP

#include <cstdint>
#include <random>

namespace subfield {

/// Deterministic 64-bit generator used by all randomized routines.
///
/// Backed by std::mt19937_64, whose output stream is fixed by the C++
/// standard. Bounded draws use rejection sampling instead of
/// std::uniform_int_distribution, which is implementation-defined, so
/// results are reproducible bit-for-bit across platforms. Parallel or
/// per-trial work derives its generator as Rng(seed + trial_index).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform value in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace subfield

#endif
