#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarcsm/groebner.hpp"
#include "polarcsm/mpoly.hpp"
#include "polarcsm/random.hpp"

namespace polarcsm {

/// Projective degrees (g_0, ..., g_n) of a rational self-map of P^n, or the
/// inclusion-exclusion polar degrees of a subscheme (which may be negative).
struct DegreeVector {
  int n = 0;
  std::vector<std::int64_t> g;

  DegreeVector() = default;
  DegreeVector(int ambient, std::vector<std::int64_t> values);

  std::int64_t operator[](std::size_t i) const { return g[i]; }
  std::string to_string() const;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Homogeneous forms p_0..p_N of one common degree defining a rational map
/// out of P^n, n = n_vars - 1.
class MapForms {
 public:
  explicit MapForms(std::vector<MPoly> forms);

  const RingPtr& ring() const { return forms_.front().ring(); }
  const std::vector<MPoly>& forms() const { return forms_; }
  unsigned degree() const { return degree_; }
  int source_dim() const { return ring()->n_vars - 1; }

 private:
  std::vector<MPoly> forms_;
  unsigned degree_ = 0;
};

enum class SaturationMethod {
  /// (J : I^inf) as the intersection of saturations by each generator of I.
  kByGenerators,
  /// (J : h^inf) for one random combination h of the generators of I. Equal to
  /// the above once J is fixed, except on a proper closed set of choices of h.
  kGenericElement,
};

struct TrialConfig {
  Seed seed{42};
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  /// Fresh random draws per degree before a dimension failure is fatal.
  int retries = 4;
  SaturationMethod saturation = SaturationMethod::kByGenerators;
  GroebnerLimits limits{};
  /// Worker threads for independent inclusion-exclusion subsets.
  unsigned threads = 1;
};

class TrialDisagreement : public std::runtime_error {
 public:
  explicit TrialDisagreement(std::vector<DegreeVector> vectors);
  const std::vector<DegreeVector>& vectors() const { return vectors_; }

 private:
  std::vector<DegreeVector> vectors_;
};

/// Degree of the restriction of the map to a general P^i, for i = 0..n.
/// Every trial must produce the same vector.
DegreeVector projective_degrees(const MapForms& map, const TrialConfig& cfg);

/// The partial derivatives of a homogeneous F of positive degree.
MapForms gradient_map(const MPoly& f);

DegreeVector polar_degrees_hypersurface(const MPoly& f, const TrialConfig& cfg);

bool is_homaloidal(const MPoly& f, const TrialConfig& cfg);

struct SubsetDegrees {
  /// 1-based indices of the generators multiplied together.
  std::vector<int> generators;
  DegreeVector degrees;
};

struct SchemePolarDegrees {
  DegreeVector total;
  std::vector<SubsetDegrees> subsets;
};

inline constexpr int kMaxSchemeGenerators = 12;

/// Inclusion-exclusion over nonempty subsets J of the generators of
/// sum (-1)^{|J|+1} g(prod_{j in J} F_j), with the per-subset vectors.
SchemePolarDegrees polar_degrees_scheme_detailed(const std::vector<MPoly>& generators, const TrialConfig& cfg);

DegreeVector polar_degrees_scheme(const std::vector<MPoly>& generators, const TrialConfig& cfg);

}  // namespace polarcsm
