#pragma once

#include <cstdint>
#include <stdexcept>

namespace polarcsm {

using Coeff = std::uint32_t;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Arithmetic in Z/p for a prime 2^20 < p < 2^32. Elements are canonical
/// representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const {
    return static_cast<Coeff>(a >= b ? a - b : std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : static_cast<Coeff>(p_ - a); }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;

  Coeff from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace polarcsm
