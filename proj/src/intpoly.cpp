#include "polarcsm/intpoly.hpp"

#include <cctype>
#include <sstream>

#include "polarcsm/parse.hpp"

namespace polarcsm {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer polynomial overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer polynomial overflow");
  return r;
}

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<std::int64_t> IntPoly::coeffs_padded(std::size_t len) const {
  if (c_.size() > len) throw std::invalid_argument("polynomial degree exceeds requested length");
  std::vector<std::int64_t> out = c_;
  out.resize(len, 0);
  return out;
}

std::int64_t IntPoly::eval(std::int64_t x) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = checked_add(checked_mul(r, x), *it);
  return r;
}

IntPoly IntPoly::compose_affine(std::int64_t a, std::int64_t b) const {
  // Horner in polynomial arithmetic.
  IntPoly inner({b, a});
  IntPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + IntPoly::constant(*it);
  return r;
}

IntPoly IntPoly::derivative() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(checked_mul(static_cast<std::int64_t>(i), c_[i]));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = checked_mul(c, -1);
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coeff(i), b.coeff(i));
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(std::int64_t k, const IntPoly& a) { return IntPoly::constant(k) * a; }

IntPoly IntPoly::divide_by_linear(std::int64_t root) const {
  if (c_.empty()) return {};
  // Synthetic division from the top coefficient down.
  std::vector<std::int64_t> q(c_.size() - 1, 0);
  std::int64_t carry = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    std::int64_t v = checked_add(c_[k], checked_mul(carry, root));
    if (k == 0) {
      if (v != 0) throw InexactDivision("remainder " + std::to_string(v) + " dividing by (t - " + std::to_string(root) + ")");
    } else {
      q[k - 1] = v;
    }
    carry = v;
  }
  return IntPoly(std::move(q));
}

IntPoly IntPoly::divide_by_t() const {
  if (coeff(0) != 0) throw InexactDivision("nonzero constant term dividing by t");
  if (c_.empty()) return {};
  return IntPoly(std::vector<std::int64_t>(c_.begin() + 1, c_.end()));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPoly IntPoly::parse(std::string_view text) {
  // Normalize "2t" to "2*t" and rename t to x0, then reuse the exact parser.
  std::string normalized;
  char prev = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == 't') {
      if (std::isdigit(static_cast<unsigned char>(prev)) || prev == ')') normalized += '*';
      normalized += "x0";
    } else if (ch == 'x') {
      throw ParseError(normalized.size(), "univariate polynomials use the variable t");
    } else {
      if (ch == '(' && (std::isdigit(static_cast<unsigned char>(prev)) || prev == 't')) normalized += '*';
      normalized += ch;
    }
    prev = ch;
  }
  IntegerTerms terms = parse_integer_poly(normalized, 1);
  std::vector<std::int64_t> coeffs;
  for (const auto& [c, m] : terms) {
    std::size_t d = m.degree();
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    coeffs[d] = checked_add(coeffs[d], c);
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace polarcsm
