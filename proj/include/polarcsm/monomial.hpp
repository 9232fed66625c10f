#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace polarcsm {

inline constexpr int kMaxVars = 16;

/// Dense exponent vector over at most kMaxVars variables with cached total degree.
/// Unused trailing slots are always zero, so comparisons need not know n_vars.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(int i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::uint32_t degree() const { return degree_; }
  /// Bit i is set iff variable i occurs.
  std::uint32_t support() const { return support_; }

  void set(int i, unsigned e) {
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    auto& slot = exps_[static_cast<std::size_t>(i)];
    degree_ = degree_ - slot + e;
    slot = static_cast<Exponent>(e);
    if (e) {
      support_ |= 1u << i;
    } else {
      support_ &= ~(1u << i);
    }
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
      if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_ || (support_ & ~other.support_)) return false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// Quotient other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
      if (r.exps_[i]) r.support_ |= 1u << i;
    }
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      r.degree_ += r.exps_[i];
    }
    r.support_ = a.support_ | b.support_;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

/// Graded reverse lexicographic order, optionally preceded by a block weight:
/// when elim_mask is nonzero, monomials are first compared by their total
/// degree in the masked variables, which makes it an elimination order for
/// that block.
struct MonomialOrder {
  std::uint32_t elim_mask = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder elimination(std::uint32_t mask) { return {mask}; }

  bool is_elimination() const { return elim_mask != 0; }

  /// Returns >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (elim_mask) {
      unsigned wa = 0, wb = 0;
      for (int i = 0; i < kMaxVars; ++i) {
        if (elim_mask & (1u << i)) {
          wa += a[i];
          wb += b[i];
        }
      }
      if (wa != wb) return wa > wb ? 1 : -1;
    }
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace polarcsm
