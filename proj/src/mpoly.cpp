#include "polarcsm/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace polarcsm {

RingPtr make_ring(int n_vars, std::uint64_t prime, MonomialOrder order) {
  if (n_vars < 1 || n_vars > kMaxVars) {
    throw std::invalid_argument("number of variables must be in 1.." + std::to_string(kMaxVars));
  }
  return std::make_shared<const Ring>(Ring{n_vars, PrimeField(prime), order});
}

RingPtr with_vars(const RingPtr& ring, int n_vars) {
  if (n_vars < 1 || n_vars > kMaxVars) {
    throw std::invalid_argument("number of variables must be in 1.." + std::to_string(kMaxVars));
  }
  return std::make_shared<const Ring>(Ring{n_vars, ring->field, ring->order});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return std::make_shared<const Ring>(Ring{ring->n_vars, ring->field, order});
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

MPoly MPoly::constant(const RingPtr& ring, std::int64_t c) {
  return monomial(ring, ring->field.from_int(c), Monomial{});
}

MPoly MPoly::variable(const RingPtr& ring, int i) {
  if (i < 0 || i >= ring->n_vars) throw std::out_of_range("variable index out of range");
  return monomial(ring, 1, Monomial::variable(i));
}

MPoly MPoly::monomial(const RingPtr& ring, Coeff c, const Monomial& m) {
  Coeff reduced = static_cast<Coeff>(c % ring->field.modulus());
  if (reduced == 0) return MPoly(ring);
  return MPoly(ring, {{reduced, m}});
}

MPoly MPoly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const auto& ord = ring->order;
  const auto& F = ring->field;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = static_cast<Coeff>(t.coeff % F.modulus());
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, t.mono});
    }
  }
  return MPoly(ring, std::move(out));
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

std::optional<unsigned> MPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0u;
  unsigned d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return std::nullopt;
  }
  return d;
}

std::uint32_t MPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

MPoly sub_mul(const MPoly& a, Coeff c, const Monomial& m, const MPoly& b) {
  if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  const auto& ord = a.ring_->order;
  const auto& F = a.field();
  const Coeff neg_c = F.neg(c);
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms_.begin(), ea = a.terms_.end();
  auto ib = b.terms_.begin(), eb = b.terms_.end();
  while (ia != ea && ib != eb) {
    Monomial mb = m * ib->mono;
    int cmp = ord.compare(ia->mono, mb);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.push_back({F.mul(neg_c, ib->coeff), mb});
      ++ib;
    } else {
      Coeff s = F.add(ia->coeff, F.mul(neg_c, ib->coeff));
      if (s) out.push_back({s, ia->mono});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ea);
  for (; ib != eb; ++ib) out.push_back({F.mul(neg_c, ib->coeff), m * ib->mono});
  return MPoly(a.ring_, std::move(out));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  return sub_mul(a, a.field().neg(1), Monomial{}, b);
}

MPoly operator-(const MPoly& a, const MPoly& b) { return sub_mul(a, 1, Monomial{}, b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  if (a.is_zero() || b.is_zero()) return MPoly(a.ring_);
  if (a.size() == 1) return b.times_term(a.leading().coeff, a.leading().mono);
  if (b.size() == 1) return a.times_term(b.leading().coeff, b.leading().mono);
  const auto& F = a.field();
  std::vector<MPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) prods.push_back({F.mul(ta.coeff, tb.coeff), ta.mono * tb.mono});
  }
  return MPoly::from_terms(a.ring_, std::move(prods));
}

MPoly MPoly::scaled(Coeff c) const { return times_term(c, Monomial{}); }

MPoly MPoly::times_term(Coeff c, const Monomial& m) const {
  const auto& F = field();
  c = static_cast<Coeff>(c % F.modulus());
  if (c == 0) return MPoly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& t : terms_) out.push_back({F.mul(c, t.coeff), m * t.mono});
  return MPoly(ring_, std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(ring_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(int var) const {
  if (var < 0 || var >= ring_->n_vars) throw std::out_of_range("variable index out of range");
  const auto& F = field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Coeff c = F.mul(t.coeff, static_cast<Coeff>(e % F.modulus()));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({c, m});
  }
  // Dividing every surviving term by x_var preserves their relative order.
  return MPoly(ring_, std::move(out));
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading().coeff));
}

MPoly MPoly::in_ring(const RingPtr& target) const {
  if (!(target->field == ring_->field)) throw RingMismatch();
  std::uint32_t allowed = target->n_vars >= 32 ? ~0u : ((1u << target->n_vars) - 1);
  if (support() & ~allowed) throw std::invalid_argument("polynomial uses variables absent from target ring");
  if (target->order == ring_->order) return MPoly(target, terms_);
  return from_terms(target, terms_);
}

std::string monomial_to_string(const Monomial& m, int n_vars) {
  std::string s;
  for (int i = 0; i < n_vars; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field().to_signed(t.coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_to_string(t.mono, ring_->n_vars);
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

}  // namespace polarcsm
