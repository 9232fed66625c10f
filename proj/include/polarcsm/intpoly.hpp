#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarcsm {

class InexactDivision : public std::domain_error {
 public:
  explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

/// Integer polynomial in one variable t, stored as coefficients c_0..c_d with
/// no trailing zeros (the zero polynomial has none). Arithmetic is checked
/// for 64-bit overflow.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  IntPoly(std::initializer_list<std::int64_t> coeffs) : IntPoly(std::vector<std::int64_t>(coeffs)) {}

  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  static IntPoly t() { return IntPoly({0, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  /// Coefficients padded with zeros to `len` entries.
  std::vector<std::int64_t> coeffs_padded(std::size_t len) const;

  std::int64_t eval(std::int64_t x) const;
  /// p(a*t + b).
  IntPoly compose_affine(std::int64_t a, std::int64_t b) const;
  IntPoly derivative() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(std::int64_t k, const IntPoly& a);
  IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
  IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }

  /// Quotient by (t - root); throws InexactDivision on a nonzero remainder.
  IntPoly divide_by_linear(std::int64_t root) const;
  /// Quotient by t; throws InexactDivision if the constant term is nonzero.
  IntPoly divide_by_t() const;

  /// "c0 + c1*t + c2*t^2", zero terms omitted, unit coefficients elided.
  std::string to_string() const;
  /// Accepts to_string output and the compact "4-2t+2t^2" style.
  static IntPoly parse(std::string_view text);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace polarcsm
