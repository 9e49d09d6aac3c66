#pragma once

#include <cstdint>

namespace eclat {

/// splitmix64: tiny deterministic generator with identical output on every
/// platform (std distributions are implementation-defined, which would break
/// the byte-identical report guarantee).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform draw in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// Bernoulli draw with probability p (clamped to [0,1]).
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
    }

  private:
    std::uint64_t state_;
};

/// Stable seed mixing for per-pair / per-channel generators.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    Rng r(z);
    return r.next();
}

} // namespace eclat
