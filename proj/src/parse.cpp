#include "polarcsm/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace polarcsm {

namespace {

// Recursive-descent parser, generic over the coefficient algebra.
template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, Algebra algebra, int n_vars)
      : text_(text), alg_(std::move(algebra)), n_vars_(n_vars) {}

  Value parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty expression");
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = alg_.add(v, term());
      } else if (accept('-')) {
        v = alg_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (accept('*')) v = alg_.mul(v, factor(), pos_);
    return v;
  }

  Value factor() {
    if (accept('-')) return alg_.neg(factor());
    if (accept('+')) return factor();
    Value base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError(at, "expected exponent");
      unsigned long long e = 0;
      for (char d : digits) {
        e = e * 10 + static_cast<unsigned>(d - '0');
        if (e > std::numeric_limits<Monomial::Exponent>::max()) throw ParseError(at, "exponent overflow");
      }
      return alg_.pow(base, static_cast<unsigned>(e), at);
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return alg_.literal(read_digits(), at);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name.size() >= 2 && name[0] == 'x' &&
          std::all_of(name.begin() + 1, name.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }) &&
          name.size() <= 4) {
        int idx = std::stoi(std::string(name.substr(1)));
        if (idx < n_vars_) return alg_.variable(idx);
      }
      throw ParseError(at, "unknown variable '" + std::string(name) + "'");
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Algebra alg_;
  int n_vars_;
  std::size_t pos_ = 0;
};

struct FieldAlgebra {
  using Value = MPoly;
  RingPtr ring;

  Value literal(const std::string& digits, std::size_t) const {
    const auto& F = ring->field;
    Coeff c = 0;
    for (char d : digits) c = F.add(F.mul(c, 10), static_cast<Coeff>(d - '0'));
    return MPoly::monomial(ring, c, Monomial{});
  }
  Value variable(int i) const { return MPoly::variable(ring, i); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b, std::size_t at) const {
    try {
      return a * b;
    } catch (const std::overflow_error&) {
      throw ParseError(at, "exponent overflow");
    }
  }
  Value pow(const Value& a, unsigned e, std::size_t at) const {
    try {
      return a.pow(e);
    } catch (const std::overflow_error&) {
      throw ParseError(at, "exponent overflow");
    }
  }
};

struct IntegerAlgebra {
  using Value = IntegerTerms;

  static bool greater(const Monomial& a, const Monomial& b) {
    return MonomialOrder::degrevlex().greater(a, b);
  }

  static Value canonical(Value terms, std::size_t at) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return greater(a.second, b.second); });
    Value out;
    for (auto& [c, m] : terms) {
      if (!out.empty() && out.back().second == m) {
        if (__builtin_add_overflow(out.back().first, c, &out.back().first)) {
          throw ParseError(at, "integer coefficient overflow");
        }
        if (out.back().first == 0) out.pop_back();
      } else if (c != 0) {
        out.emplace_back(c, m);
      }
    }
    return out;
  }

  Value literal(const std::string& digits, std::size_t at) const {
    std::int64_t c = 0;
    for (char d : digits) {
      if (__builtin_mul_overflow(c, 10, &c) || __builtin_add_overflow(c, d - '0', &c)) {
        throw ParseError(at, "integer literal overflow");
      }
    }
    if (c == 0) return {};
    return {{c, Monomial{}}};
  }
  Value variable(int i) const { return {{1, Monomial::variable(i)}}; }
  Value add(Value a, const Value& b) const {
    a.insert(a.end(), b.begin(), b.end());
    return canonical(std::move(a), 0);
  }
  Value neg(Value a) const {
    for (auto& t : a) t.first = -t.first;
    return a;
  }
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value mul(const Value& a, const Value& b, std::size_t at) const {
    Value out;
    for (const auto& [ca, ma] : a) {
      for (const auto& [cb, mb] : b) {
        std::int64_t c;
        if (__builtin_mul_overflow(ca, cb, &c)) throw ParseError(at, "integer coefficient overflow");
        try {
          out.emplace_back(c, ma * mb);
        } catch (const std::overflow_error&) {
          throw ParseError(at, "exponent overflow");
        }
      }
    }
    return canonical(std::move(out), at);
  }
  Value pow(const Value& a, unsigned e, std::size_t at) const {
    Value r{{1, Monomial{}}};
    for (unsigned i = 0; i < e; ++i) r = mul(r, a, at);
    return r;
  }
};

}  // namespace

MPoly parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser<FieldAlgebra>(text, FieldAlgebra{ring}, ring->n_vars).parse();
}

IntegerTerms parse_integer_poly(std::string_view text, int n_vars) {
  if (n_vars < 1 || n_vars > kMaxVars) throw std::invalid_argument("bad number of variables");
  return Parser<IntegerAlgebra>(text, IntegerAlgebra{}, n_vars).parse();
}

}  // namespace polarcsm
