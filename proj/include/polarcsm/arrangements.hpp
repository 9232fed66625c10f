#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarcsm/classcalc.hpp"
#include "polarcsm/intpoly.hpp"
#include "polarcsm/polar.hpp"

namespace polarcsm {

inline constexpr int kMaxHyperplanes = 16;

/// Pairwise non-proportional nonzero linear forms on k^{n+1}, i.e. a central
/// arrangement whose projectivization lives in P^n.
class Arrangement {
 public:
  Arrangement(int n, std::vector<std::vector<std::int64_t>> forms);
  /// Forms written in the polynomial grammar over x0..xn.
  static Arrangement from_text(int n, const std::vector<std::string>& forms);

  int n() const { return n_; }
  const std::vector<std::vector<std::int64_t>>& forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }

  /// Product of the forms, reduced into `ring`.
  MPoly defining_polynomial(const RingPtr& ring) const;

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> forms_;
};

struct Flat {
  /// Bit i set iff hyperplane i contains the flat.
  std::uint32_t hyperplanes = 0;
  int rank = 0;
  /// Linear dimension inside k^{n+1}.
  int dim = 0;
  std::int64_t moebius = 0;
};

/// Flats ordered by rank, bottom (the whole space) first.
struct IntersectionLattice {
  int ambient_dim = 0;
  std::vector<Flat> flats;
};

IntersectionLattice build_lattice(const Arrangement& arrangement);

/// sum over flats of mu(flat) t^{dim flat}.
IntPoly char_poly(const IntersectionLattice& lattice);
IntPoly char_poly(const Arrangement& arrangement);

/// P / (t - 1); throws InexactDivision if P(1) != 0.
IntPoly reduced_char_poly(const IntPoly& p);

/// chi of the projective complement: (t Pr(-t) + Pr(1)) / (t + 1).
ChiPoly chi_from_charpoly(const IntPoly& reduced, int n);
/// Pr(t) = ((t - 1) chi(-t) + chi(0)) / t.
IntPoly charpoly_from_chi(const ChiPoly& chi);

/// Pr(t) = gamma_complement(t - 1), with gamma_complement from the polar
/// pipeline applied to the product of the forms.
IntPoly charpoly_algebraic(const Arrangement& arrangement, const TrialConfig& cfg);

}  // namespace polarcsm
