#pragma once

#include <cstdint>

#include "polarcsm/mpoly.hpp"

namespace polarcsm {

struct Seed {
  std::uint64_t value = 42;
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// SplitMix64 (Steele, Lea, Flood 2014). Every generic choice in the library
/// is drawn from one of these, so a seed reproduces a run bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream keyed by `stream`; does not advance *this.
  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 mixer(Seed{state_ ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL)});
    return SplitMix64(Seed{mixer.next()});
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

/// Uniform field element.
inline Coeff random_coeff(SplitMix64& rng, const PrimeField& F) {
  return static_cast<Coeff>(rng.below(F.modulus()));
}

/// Homogeneous linear form with uniform coefficients, redrawn while zero.
MPoly random_linear_form(SplitMix64& rng, const RingPtr& ring);

/// Uniform combination sum c_j * forms[j], redrawn while all c_j vanish.
MPoly random_combination(SplitMix64& rng, const std::vector<MPoly>& forms);

}  // namespace polarcsm
