#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarcsm/intpoly.hpp"

namespace polarcsm {

using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact rational coefficients, no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// t^i -> t^i / i!.
RatPoly sigma(const IntPoly& p);
/// t^i -> i! t^i; throws InexactDivision if a coefficient is not integral.
IntPoly sigma_inv(const RatPoly& q);

/// An element of the Grothendieck ring of varieties over P^infinity,
/// represented by its image gamma in Z[t].
struct GClass {
  IntPoly gamma;
  std::string label;

  GClass() = default;
  GClass(IntPoly g, std::string name = {}) : gamma(std::move(g)), label(std::move(name)) {}

  std::int64_t euler_characteristic() const { return gamma.coeff(0); }

  friend GClass operator+(const GClass& a, const GClass& b) { return GClass(a.gamma + b.gamma); }
  friend GClass operator-(const GClass& a, const GClass& b) { return GClass(a.gamma - b.gamma); }
  friend GClass operator*(std::int64_t k, const GClass& a) { return GClass(k * a.gamma); }
  friend bool operator==(const GClass& a, const GClass& b) { return a.gamma == b.gamma; }
};

/// Segre product: gamma = sigma^-1(sigma(gamma_a) sigma(gamma_b)).
GClass star(const GClass& a, const GClass& b);
/// Affine-concatenation product: gamma = gamma_a * gamma_b.
GClass dot(const GClass& a, const GClass& b);
/// The torus k^*, gamma = t.
GClass class_T();
GClass class_Pn(int n);
GClass class_An(int n);
GClass class_point();
/// t gamma_a gamma_b + gamma_a + gamma_b.
GClass join_gamma(const GClass& a, const GClass& b);
/// (t + 1) gamma_a + 1.
GClass cone_gamma(const GClass& a);

}  // namespace polarcsm
