#pragma once

#include <cstdint>
#include <random>

namespace cblab {

// All randomness in the toolkit flows through caller-owned instances of this
// wrapper; identical seeds give identical draws on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound), bound > 0. Rejection sampling keeps the
    // distribution exact and seed-stable.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    // Derives an independent child stream; used when an operation needs
    // several internal streams that must not interleave.
    Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace cblab
