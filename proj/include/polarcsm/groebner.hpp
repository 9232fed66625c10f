#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarcsm/mpoly.hpp"
#include "polarcsm/random.hpp"

namespace polarcsm {

/// A computation hit its configured budget. Never a mathematical answer.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  explicit ResourceLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A zero-dimensionality precondition failed; usually a non-generic random
/// choice, so callers may retry with fresh randomness.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// An ideal given by generators in a common ring. Zero generators are
/// dropped; an empty list is the zero ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MPoly> generators);
  explicit Ideal(std::vector<MPoly> generators);

  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {MPoly::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MPoly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  Ideal operator+(const Ideal& other) const;

 private:
  RingPtr ring_;
  std::vector<MPoly> gens_;
};

struct GroebnerLimits {
  std::size_t max_reductions = 200000;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by leading
/// monomial. Elements live in a ring carrying the basis's term order.
class GBasis {
 public:
  GBasis(RingPtr ring, std::vector<MPoly> elements) : ring_(std::move(ring)), elems_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order; }
  const std::vector<MPoly>& elements() const { return elems_; }
  bool is_unit() const { return elems_.size() == 1 && elems_.front().is_constant(); }
  bool is_zero() const { return elems_.empty(); }

 private:
  RingPtr ring_;
  std::vector<MPoly> elems_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar
/// selection. Throws ResourceLimitExceeded when more than
/// limits.max_reductions S-polynomials are reduced.
GBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::degrevlex(),
                  const GroebnerLimits& limits = {});

/// Fully reduced remainder of f modulo the basis, returned in f's ring.
MPoly normal_form(const MPoly& f, const GBasis& basis);

bool contains(const GBasis& basis, const MPoly& f);
bool contains(const Ideal& ideal, const MPoly& f, const GroebnerLimits& limits = {});
bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

/// Certificate: every S-polynomial of basis pairs and every generator of
/// `ideal` reduces to zero, and no leading monomial divides another.
bool verify_groebner(const GBasis& basis, const Ideal& ideal);

/// I intersected with the subring omitting the variables in `vars`; the
/// result stays in the ring of `ideal`.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& vars, const GroebnerLimits& limits = {});

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

/// (J : p^inf) via J + (y*p - 1) and elimination of the auxiliary y.
Ideal saturate_by_poly(const Ideal& ideal, const MPoly& p, const GroebnerLimits& limits = {});

/// (J : I^inf), the intersection of the saturations by each generator of I.
Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& by, const GroebnerLimits& limits = {});

/// Dimension of the affine variety; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal, const GroebnerLimits& limits = {});
int krull_dimension(const GBasis& degrevlex_basis);

/// Length of the zero-dimensional projective scheme cut out by a homogeneous
/// ideal, 0 when it is empty. Dehomogenizes at a random linear form and
/// counts standard monomials. Throws DimensionError if the chart is not
/// zero-dimensional.
std::uint64_t degree_zero_dim_projective(const Ideal& ideal, SplitMix64& rng,
                                         const GroebnerLimits& limits = {});

/// Number of standard monomials of a zero-dimensional basis; throws
/// DimensionError if some variable has no pure-power leading monomial.
std::uint64_t count_standard_monomials(const GBasis& basis);

}  // namespace polarcsm
