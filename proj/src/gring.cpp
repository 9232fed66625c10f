#include "polarcsm/gring.hpp"

#include <sstream>

#include "polarcsm/classcalc.hpp"

namespace polarcsm {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial(std::size_t i) {
  cpp_int f = 1;
  for (std::size_t k = 2; k <= i; ++k) f *= k;
  return f;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(r));
}

std::string RatPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
    os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) os << mag << (i ? "*" : "");
    if (i >= 1) os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

RatPoly sigma(const IntPoly& p) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c.emplace_back(Rational(p.coeffs()[i]) / Rational(factorial(i)));
  return RatPoly(std::move(c));
}

IntPoly sigma_inv(const RatPoly& q) {
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
    Rational v = q.coeffs()[i] * Rational(factorial(i));
    if (boost::multiprecision::denominator(v) != 1) {
      throw InexactDivision("coefficient of t^" + std::to_string(i) + " is not integral after inverse sigma");
    }
    cpp_int num = boost::multiprecision::numerator(v);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("inverse sigma coefficient exceeds 64 bits");
    }
    c.push_back(static_cast<std::int64_t>(num));
  }
  return IntPoly(std::move(c));
}

GClass star(const GClass& a, const GClass& b) { return GClass(sigma_inv(sigma(a.gamma) * sigma(b.gamma))); }

GClass dot(const GClass& a, const GClass& b) { return GClass(a.gamma * b.gamma); }

GClass class_T() { return GClass(IntPoly::t(), "T"); }

GClass class_point() { return GClass(IntPoly::constant(1), "P0"); }

GClass class_Pn(int n) { return GClass(gamma_Pn(n).poly(), "P" + std::to_string(n)); }

GClass class_An(int n) {
  if (n < 0) throw std::invalid_argument("class_An needs n >= 0");
  if (n == 0) return GClass(IntPoly::constant(1), "A0");
  return GClass(gamma_Pn(n).poly() - gamma_Pn(n - 1).poly(), "A" + std::to_string(n));
}

GClass join_gamma(const GClass& a, const GClass& b) {
  const IntPoly one = IntPoly::constant(1);
  IntPoly product = (IntPoly::t() * a.gamma + one) * (IntPoly::t() * b.gamma + one) - one;
  return GClass(product.divide_by_t());
}

GClass cone_gamma(const GClass& a) {
  return GClass(IntPoly({1, 1}) * a.gamma + IntPoly::constant(1));
}

}  // namespace polarcsm
