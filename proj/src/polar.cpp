#include "polarcsm/polar.hpp"

#include <future>
#include <sstream>

namespace polarcsm {

DegreeVector::DegreeVector(int ambient, std::vector<std::int64_t> values) : n(ambient), g(std::move(values)) {
  if (g.size() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("degree vector needs n+1 entries");
}

std::string DegreeVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i];
  os << ']';
  return os.str();
}

MapForms::MapForms(std::vector<MPoly> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw std::invalid_argument("a map needs at least one form");
  bool any_nonzero = false;
  std::optional<unsigned> common;
  for (const auto& f : forms_) {
    if (!same_ring(f.ring(), forms_.front().ring())) throw RingMismatch();
    if (f.is_zero()) continue;
    any_nonzero = true;
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("map forms must be homogeneous");
    if (common && *common != *d) throw std::invalid_argument("map forms must share one degree");
    common = d;
  }
  if (!any_nonzero) throw std::invalid_argument("map forms are all zero");
  degree_ = *common;
}

namespace {

std::string describe(const std::vector<DegreeVector>& vs) {
  std::string s = "trials disagree:";
  for (const auto& v : vs) s += " " + v.to_string();
  return s;
}

}  // namespace

TrialDisagreement::TrialDisagreement(std::vector<DegreeVector> vectors)
    : std::runtime_error(describe(vectors)), vectors_(std::move(vectors)) {}

namespace {

std::vector<MPoly> nonzero_forms(const MapForms& map) {
  std::vector<MPoly> out;
  for (const auto& f : map.forms()) {
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

// g_i for one random choice: cut by n-i general hyperplanes and i general
// pullbacks, remove the base locus, count the remaining points.
std::uint64_t one_degree(const MapForms& map, int i, SplitMix64& rng, const TrialConfig& cfg) {
  const auto& ring = map.ring();
  const int n = map.source_dim();
  const std::vector<MPoly> forms = nonzero_forms(map);
  std::vector<MPoly> gens;
  for (int k = 0; k < n - i; ++k) gens.push_back(random_linear_form(rng, ring));
  for (int k = 0; k < i; ++k) gens.push_back(random_combination(rng, forms));
  Ideal cut(ring, std::move(gens));
  Ideal residual = cfg.saturation == SaturationMethod::kByGenerators
                       ? saturate_by_ideal(cut, Ideal(ring, forms), cfg.limits)
                       : saturate_by_poly(cut, random_combination(rng, forms), cfg.limits);
  return degree_zero_dim_projective(residual, rng, cfg.limits);
}

DegreeVector one_trial(const MapForms& map, SplitMix64 rng, const TrialConfig& cfg) {
  const int n = map.source_dim();
  std::vector<std::int64_t> g(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    SplitMix64 stream = rng.split(static_cast<std::uint64_t>(i));
    for (int attempt = 0;; ++attempt) {
      try {
        g[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(one_degree(map, i, stream, cfg));
        break;
      } catch (const DimensionError&) {
        if (attempt + 1 >= cfg.retries) throw;
      }
    }
  }
  return DegreeVector(n, std::move(g));
}

void check_config(const TrialConfig& cfg, const RingPtr& ring) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.retries < 1) throw std::invalid_argument("retries must be at least 1");
  if (ring->field.modulus() != cfg.prime) {
    throw std::invalid_argument("polynomial ring modulus differs from the configured prime");
  }
}

}  // namespace

DegreeVector projective_degrees(const MapForms& map, const TrialConfig& cfg) {
  check_config(cfg, map.ring());
  const int n = map.source_dim();
  if (n > 8) throw std::invalid_argument("projective degrees are limited to n <= 8");
  if (map.degree() == 0) {
    std::vector<std::int64_t> g(static_cast<std::size_t>(n) + 1, 0);
    g[0] = 1;
    return DegreeVector(n, std::move(g));
  }
  SplitMix64 root(cfg.seed);
  std::vector<DegreeVector> results;
  for (int t = 0; t < cfg.trials; ++t) {
    results.push_back(one_trial(map, root.split(static_cast<std::uint64_t>(t)), cfg));
  }
  for (const auto& r : results) {
    if (!(r == results.front())) throw TrialDisagreement(results);
  }
  return results.front();
}

MapForms gradient_map(const MPoly& f) {
  auto d = f.homogeneous_degree();
  if (!d) throw std::invalid_argument("polynomial is not homogeneous");
  if (f.is_constant()) throw std::invalid_argument("polynomial is constant");
  std::vector<MPoly> partials;
  for (int i = 0; i < f.ring()->n_vars; ++i) partials.push_back(f.derivative(i));
  return MapForms(std::move(partials));
}

DegreeVector polar_degrees_hypersurface(const MPoly& f, const TrialConfig& cfg) {
  return projective_degrees(gradient_map(f), cfg);
}

bool is_homaloidal(const MPoly& f, const TrialConfig& cfg) {
  DegreeVector g = polar_degrees_hypersurface(f, cfg);
  return g.g.back() == 1;
}

SchemePolarDegrees polar_degrees_scheme_detailed(const std::vector<MPoly>& generators, const TrialConfig& cfg) {
  const int r = static_cast<int>(generators.size());
  if (r < 1) throw std::invalid_argument("at least one generator is required");
  if (r > kMaxSchemeGenerators) {
    throw std::invalid_argument("at most " + std::to_string(kMaxSchemeGenerators) + " generators are supported");
  }
  for (const auto& f : generators) {
    if (!same_ring(f.ring(), generators.front().ring())) throw RingMismatch();
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("generator " + f.to_string() + " is not homogeneous");
    if (*d == 0) throw std::invalid_argument("generators must have positive degree");
  }
  const int n = generators.front().ring()->n_vars - 1;
  const std::uint32_t subsets = (1u << r) - 1;

  // Each subset draws from its own stream, so results do not depend on
  // evaluation order or thread count.
  auto compute = [&](std::uint32_t mask) {
    MPoly product = MPoly::constant(generators.front().ring(), 1);
    SubsetDegrees s;
    for (int j = 0; j < r; ++j) {
      if (mask & (1u << j)) {
        product *= generators[static_cast<std::size_t>(j)];
        s.generators.push_back(j + 1);
      }
    }
    TrialConfig sub = cfg;
    sub.seed = Seed{SplitMix64(cfg.seed).split(mask).next()};
    s.degrees = polar_degrees_hypersurface(product, sub);
    return s;
  };

  std::vector<SubsetDegrees> results(subsets);
  if (cfg.threads > 1) {
    for (std::uint32_t base = 1; base <= subsets; base += cfg.threads) {
      std::vector<std::future<SubsetDegrees>> batch;
      for (std::uint32_t mask = base; mask <= subsets && mask < base + cfg.threads; ++mask) {
        batch.push_back(std::async(std::launch::async, compute, mask));
      }
      for (std::size_t k = 0; k < batch.size(); ++k) results[base - 1 + k] = batch[k].get();
    }
  } else {
    for (std::uint32_t mask = 1; mask <= subsets; ++mask) results[mask - 1] = compute(mask);
  }

  // List subsets by size, then lexicographically, for readable audits.
  std::stable_sort(results.begin(), results.end(), [](const SubsetDegrees& a, const SubsetDegrees& b) {
    if (a.generators.size() != b.generators.size()) return a.generators.size() < b.generators.size();
    return a.generators < b.generators;
  });

  std::vector<std::int64_t> total(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& s : results) {
    const std::int64_t sign = s.generators.size() % 2 == 1 ? 1 : -1;
    for (int i = 0; i <= n; ++i) total[static_cast<std::size_t>(i)] += sign * s.degrees.g[static_cast<std::size_t>(i)];
  }
  return {DegreeVector(n, std::move(total)), std::move(results)};
}

DegreeVector polar_degrees_scheme(const std::vector<MPoly>& generators, const TrialConfig& cfg) {
  return polar_degrees_scheme_detailed(generators, cfg).total;
}

}  // namespace polarcsm
