#pragma once

#include <cstdint>

namespace gowers {

// Counter-based deterministic generator: output k of stream s under seed is
// splitmix64(mix(seed, s) + (k+1)*GOLDEN). Stateless per index, identical on
// every platform; the stream tag keeps instance kinds from sharing outputs.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream))) {}

    std::uint64_t at(std::uint64_t counter) const {
        return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
    }

    std::uint64_t next() { return at(counter_++); }

    // Uniform in [0, 1), 53 mantissa bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) by rejection (bound small in practice).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Stream tags for the seeded instance kinds.
inline constexpr std::uint64_t kStreamHaar = 0x68616172;     // "haar"
inline constexpr std::uint64_t kStreamPoly = 0x706f6c79;     // "poly"
inline constexpr std::uint64_t kStreamSample = 0x73616d70;   // "samp"
inline constexpr std::uint64_t kStreamSet = 0x73657421;      // "set!"

} // namespace gowers
