#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polarcsm/field.hpp"
#include "polarcsm/monomial.hpp"

namespace polarcsm {

/// Polynomial ring Z/p[x0, ..., x{n-1}] together with the term order used to
/// keep its polynomials sorted.
struct Ring {
  int n_vars;
  PrimeField field;
  MonomialOrder order;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int n_vars, std::uint64_t prime = kDefaultPrime,
                  MonomialOrder order = MonomialOrder::degrevlex());

/// Same field and order, different number of variables.
RingPtr with_vars(const RingPtr& ring, int n_vars);
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

bool same_ring(const RingPtr& a, const RingPtr& b);

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

/// Sparse polynomial; terms are strictly descending in the ring's order and
/// carry no zero coefficients. The zero polynomial has no terms.
class MPoly {
 public:
  struct Term {
    Coeff coeff;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(const RingPtr& ring, std::int64_t c);
  static MPoly variable(const RingPtr& ring, int i);
  static MPoly monomial(const RingPtr& ring, Coeff c, const Monomial& m);
  /// Sorts, merges duplicates and drops zeros.
  static MPoly from_terms(const RingPtr& ring, std::vector<Term> terms);
  /// Trusts the caller: terms must already be strictly descending and nonzero.
  static MPoly from_canonical(const RingPtr& ring, std::vector<Term> terms) {
    return MPoly(ring, std::move(terms));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  const PrimeField& field() const { return ring_->field; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Maximum total degree over terms; -1 for the zero polynomial.
  int total_degree() const;
  /// Common degree of all terms, 0 for the zero polynomial, empty if mixed.
  std::optional<unsigned> homogeneous_degree() const;
  /// Bitmask of variables that occur.
  std::uint32_t support() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  MPoly scaled(Coeff c) const;
  MPoly times_term(Coeff c, const Monomial& m) const;
  MPoly pow(unsigned e) const;
  MPoly derivative(int var) const;
  /// Divides by the leading coefficient.
  MPoly monic() const;

  /// The same polynomial re-sorted for another ring over the same field.
  /// The target must have enough variables for every occurring one.
  MPoly in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  friend MPoly sub_mul(const MPoly& a, Coeff c, const Monomial& m, const MPoly& b);

  MPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// a - c * m * b.
MPoly sub_mul(const MPoly& a, Coeff c, const Monomial& m, const MPoly& b);

std::string monomial_to_string(const Monomial& m, int n_vars);

}  // namespace polarcsm
