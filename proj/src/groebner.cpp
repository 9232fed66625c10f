#include "polarcsm/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <span>

namespace polarcsm {

Ideal::Ideal(RingPtr ring, std::vector<MPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(std::vector<MPoly> generators)
    : Ideal(generators.empty() ? throw std::invalid_argument("ideal needs a ring") : generators.front().ring(),
            std::move(generators)) {}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const MPoly& g) { return g.homogeneous_degree().has_value(); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
  std::vector<MPoly> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

namespace {

using Term = MPoly::Term;
using Terms = std::vector<Term>;

struct Reducer {
  const MPoly* poly;
  Monomial lead;
};

// a - c * m * b, where a is given as a span (a suffix of some term list).
Terms sub_mul_span(std::span<const Term> a, Coeff c, const Monomial& m, std::span<const Term> b,
                   const MonomialOrder& ord, const PrimeField& F) {
  const Coeff neg_c = F.neg(c);
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    Monomial mb = m * b[ib].mono;
    int cmp = ord.compare(a[ia].mono, mb);
    if (cmp > 0) {
      out.push_back(a[ia++]);
    } else if (cmp < 0) {
      out.push_back({F.mul(neg_c, b[ib].coeff), mb});
      ++ib;
    } else {
      Coeff s = F.add(a[ia].coeff, F.mul(neg_c, b[ib].coeff));
      if (s) out.push_back({s, a[ia].mono});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(ia), a.end());
  for (; ib < b.size(); ++ib) out.push_back({F.mul(neg_c, b[ib].coeff), m * b[ib].mono});
  return out;
}

const Reducer* find_reducer(const std::vector<Reducer>& reducers, const Monomial& m) {
  for (const auto& r : reducers) {
    if (r.lead.divides(m)) return &r;
  }
  return nullptr;
}

// Reduces f by monic reducers. With `full`, every term is reduced; otherwise
// only the leading term is, until it is irreducible.
MPoly reduce(const MPoly& f, const std::vector<Reducer>& reducers, bool full) {
  const auto& ring = f.ring();
  const auto& ord = ring->order;
  const auto& F = ring->field;
  Terms done;
  Terms current = f.terms();
  std::size_t offset = 0;
  while (offset < current.size()) {
    const Term lt = current[offset];
    const Reducer* r = find_reducer(reducers, lt.mono);
    if (r) {
      const auto& g = r->poly->terms();
      Monomial q = r->lead.quotient_of(lt.mono);
      // Leading terms cancel; skip them on both sides.
      current = sub_mul_span(std::span<const Term>(current).subspan(offset + 1), lt.coeff, q,
                             std::span<const Term>(g).subspan(1), ord, F);
      offset = 0;
    } else if (full) {
      done.push_back(lt);
      ++offset;
    } else {
      break;
    }
  }
  done.insert(done.end(), current.begin() + static_cast<std::ptrdiff_t>(offset), current.end());
  return MPoly::from_canonical(ring, std::move(done));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerLimits& limits) : ring_(std::move(ring)), limits_(limits) {}

  GBasis run(std::vector<MPoly> inputs) {
    const auto& ord = ring_->order;
    std::sort(inputs.begin(), inputs.end(), [&](const MPoly& a, const MPoly& b) {
      return ord.greater(b.leading().mono, a.leading().mono);
    });
    for (auto& f : inputs) {
      MPoly h = reduce(f, active_reducers(), true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic(), static_cast<unsigned>(h.total_degree()));
    }
    while (!pairs_.empty()) {
      auto best = select();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++reductions_ > limits_.max_reductions) {
        throw ResourceLimitExceeded("Groebner basis exceeded " + std::to_string(limits_.max_reductions) +
                                    " S-pair reductions");
      }
      MPoly s = spoly(p);
      MPoly h = reduce(s, active_reducers(), true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic(), p.sugar);
    }
    return finish();
  }

 private:
  GBasis unit() const { return GBasis(ring_, {MPoly::constant(ring_, 1)}); }

  const std::vector<Reducer>& active_reducers() {
    if (reducers_dirty_) {
      reducers_.clear();
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (active_[k]) reducers_.push_back({&polys_[k], polys_[k].leading().mono});
      }
      // Prefer short reducers of low degree.
      std::stable_sort(reducers_.begin(), reducers_.end(), [](const Reducer& a, const Reducer& b) {
        return a.poly->size() < b.poly->size();
      });
      reducers_dirty_ = false;
    }
    return reducers_;
  }

  std::size_t select() const {
    const auto& ord = ring_->order;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && ord.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    return best;
  }

  MPoly spoly(const Pair& p) const {
    const MPoly& f = polys_[p.i];
    const MPoly& g = polys_[p.j];
    Monomial mf = f.leading().mono.quotient_of(p.lcm);
    Monomial mg = g.leading().mono.quotient_of(p.lcm);
    Terms shifted;
    shifted.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) shifted.push_back({f.terms()[k].coeff, mf * f.terms()[k].mono});
    Terms r = sub_mul_span(shifted, 1, mg, std::span<const Term>(g.terms()).subspan(1), ring_->order,
                           ring_->field);
    return MPoly::from_canonical(ring_, std::move(r));
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    unsigned si = sugar_[i] + l.degree() - polys_[i].leading().mono.degree();
    unsigned sj = sugar_[j] + l.degree() - polys_[j].leading().mono.degree();
    return std::max(si, sj);
  }

  // Gebauer-Moeller update with the new polynomial h.
  void insert(MPoly h, unsigned sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(false);
    const Monomial lh = polys_[hi].leading().mono;

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Monomial l = lcm(lh, polys_[g].leading().mono);
      candidates.push_back({g, hi, l, pair_sugar(g, hi, l)});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = coprime(lh, polys_[p.i].leading().mono);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < candidates.size() && keep; ++m) {
          if (candidates[m].lcm.divides(p.lcm)) keep = false;
        }
        for (const auto& d : kept) {
          if (!keep) break;
          if (d.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (!coprime(lh, polys_[p.i].leading().mono)) fresh.push_back(p);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial li = lcm(polys_[p.i].leading().mono, lh);
      Monomial lj = lcm(polys_[p.j].leading().mono, lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading().mono)) active_[g] = false;
    }
    active_[hi] = true;
    reducers_dirty_ = true;
  }

  GBasis finish() {
    const auto& ord = ring_->order;
    std::vector<MPoly> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(polys_[k]);
    }
    std::sort(basis.begin(), basis.end(),
              [&](const MPoly& a, const MPoly& b) { return ord.greater(b.leading().mono, a.leading().mono); });
    // Inter-reduce tails; leading monomials are already minimal.
    std::vector<MPoly> reduced;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t m = 0; m < basis.size(); ++m) {
        if (m != k) others.push_back({&basis[m], basis[m].leading().mono});
      }
      const Term lt = basis[k].leading();
      Terms tail(basis[k].terms().begin() + 1, basis[k].terms().end());
      MPoly t = reduce(MPoly::from_canonical(ring_, std::move(tail)), others, true);
      Terms all{lt};
      all.insert(all.end(), t.terms().begin(), t.terms().end());
      reduced.push_back(MPoly::from_canonical(ring_, std::move(all)));
    }
    return GBasis(ring_, std::move(reduced));
  }

  RingPtr ring_;
  GroebnerLimits limits_;
  std::vector<MPoly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Reducer> reducers_;
  bool reducers_dirty_ = true;
  std::size_t reductions_ = 0;
};

std::vector<Reducer> reducers_of(const GBasis& basis) {
  std::vector<Reducer> rs;
  for (const auto& g : basis.elements()) rs.push_back({&g, g.leading().mono});
  return rs;
}

std::uint32_t mask_of(const std::vector<int>& vars, int n_vars) {
  std::uint32_t mask = 0;
  for (int v : vars) {
    if (v < 0 || v >= n_vars) throw std::out_of_range("variable index out of range");
    mask |= 1u << v;
  }
  return mask;
}

// Computes a basis in `ring` extended by `extra` auxiliary variables (placed
// last) with the auxiliary block eliminated, and returns the generators free
// of them, in the original ring.
Ideal eliminate_trailing(const RingPtr& base, std::vector<MPoly> gens_in_big, const RingPtr& big,
                         const GroebnerLimits& limits) {
  GBasis gb = buchberger(Ideal(big, std::move(gens_in_big)), big->order, limits);
  std::uint32_t keep = (1u << base->n_vars) - 1;
  std::vector<MPoly> out;
  for (const auto& g : gb.elements()) {
    if ((g.support() & ~keep) == 0) out.push_back(g.in_ring(base));
  }
  return Ideal(base, std::move(out));
}

}  // namespace

GBasis buchberger(const Ideal& ideal, MonomialOrder order, const GroebnerLimits& limits) {
  RingPtr ring = ideal.ring()->order == order ? ideal.ring() : with_order(ideal.ring(), order);
  std::vector<MPoly> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(g.in_ring(ring));
  return Buchberger(ring, limits).run(std::move(inputs));
}

MPoly normal_form(const MPoly& f, const GBasis& basis) {
  MPoly g = f.in_ring(basis.ring());
  MPoly r = reduce(g, reducers_of(basis), true);
  return r.in_ring(f.ring());
}

bool contains(const GBasis& basis, const MPoly& f) { return normal_form(f, basis).is_zero(); }

bool contains(const Ideal& ideal, const MPoly& f, const GroebnerLimits& limits) {
  return contains(buchberger(ideal, MonomialOrder::degrevlex(), limits), f);
}

bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
  GBasis ga = buchberger(a, MonomialOrder::degrevlex(), limits);
  GBasis gb = buchberger(b, MonomialOrder::degrevlex(), limits);
  return ga.elements() == gb.elements();
}

bool verify_groebner(const GBasis& basis, const Ideal& ideal) {
  const auto& elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i != j && elems[i].leading().mono.divides(elems[j].leading().mono)) return false;
    }
  }
  const auto& ring = basis.ring();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const auto& f = elems[i];
      const auto& g = elems[j];
      Monomial l = lcm(f.leading().mono, g.leading().mono);
      MPoly s = f.times_term(f.field().inv(f.leading().coeff), f.leading().mono.quotient_of(l)) -
                g.times_term(g.field().inv(g.leading().coeff), g.leading().mono.quotient_of(l));
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  for (const auto& g : ideal.generators()) {
    if (!normal_form(g.in_ring(ring), basis).is_zero()) return false;
  }
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& vars, const GroebnerLimits& limits) {
  const auto& ring = ideal.ring();
  std::uint32_t mask = mask_of(vars, ring->n_vars);
  if (std::popcount(mask) >= ring->n_vars) throw std::invalid_argument("cannot eliminate every variable");
  if (mask == 0) return ideal;
  GBasis gb = buchberger(ideal, MonomialOrder::elimination(mask), limits);
  std::vector<MPoly> out;
  for (const auto& g : gb.elements()) {
    if ((g.support() & mask) == 0) out.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
  const auto& ring = a.ring();
  if (!same_ring(ring, b.ring())) throw RingMismatch();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  const int u = ring->n_vars;
  RingPtr big = make_ring(u + 1, ring->field.modulus(), MonomialOrder::elimination(1u << u));
  MPoly uu = MPoly::variable(big, u);
  MPoly one_minus_u = MPoly::constant(big, 1) - uu;
  std::vector<MPoly> gens;
  for (const auto& g : a.generators()) gens.push_back(uu * g.in_ring(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_u * g.in_ring(big));
  return eliminate_trailing(ring, std::move(gens), big, limits);
}

Ideal saturate_by_poly(const Ideal& ideal, const MPoly& p, const GroebnerLimits& limits) {
  const auto& ring = ideal.ring();
  if (!same_ring(ring, p.ring())) throw RingMismatch();
  if (p.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  if (p.is_constant() || ideal.is_zero()) return ideal;
  const int y = ring->n_vars;
  RingPtr big = make_ring(y + 1, ring->field.modulus(), MonomialOrder::elimination(1u << y));
  std::vector<MPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(big));
  gens.push_back(MPoly::variable(big, y) * p.in_ring(big) - MPoly::constant(big, 1));
  return eliminate_trailing(ring, std::move(gens), big, limits);
}

Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& by, const GroebnerLimits& limits) {
  if (by.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  for (const auto& p : by.generators()) {
    if (p.is_constant()) return ideal;
  }
  std::optional<Ideal> result;
  for (const auto& p : by.generators()) {
    Ideal s = saturate_by_poly(ideal, p, limits);
    result = result ? intersect(*result, s, limits) : s;
  }
  return *result;
}

int krull_dimension(const GBasis& basis) {
  if (basis.is_unit()) return -1;
  const int n = basis.ring()->n_vars;
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis.elements()) supports.push_back(g.leading().mono.support());
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& ideal, const GroebnerLimits& limits) {
  if (ideal.is_zero()) return ideal.ring()->n_vars;
  return krull_dimension(buchberger(ideal, MonomialOrder::degrevlex(), limits));
}

std::uint64_t count_standard_monomials(const GBasis& basis) {
  if (basis.is_unit()) return 0;
  const int n = basis.ring()->n_vars;
  std::vector<Monomial> leads;
  for (const auto& g : basis.elements()) leads.push_back(g.leading().mono);
  std::vector<unsigned> bound(static_cast<std::size_t>(n), 0);
  for (const auto& m : leads) {
    if (std::popcount(m.support()) == 1) {
      int v = std::countr_zero(m.support());
      unsigned e = m[v];
      if (bound[static_cast<std::size_t>(v)] == 0 || e < bound[static_cast<std::size_t>(v)]) {
        bound[static_cast<std::size_t>(v)] = e;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (bound[static_cast<std::size_t>(v)] == 0) {
      throw DimensionError("ideal is not zero-dimensional (x" + std::to_string(v) + " is free)");
    }
  }
  auto divisible = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Depth-first over exponent vectors; once a partial monomial lies in the
  // leading ideal, so does every larger exponent in the current variable.
  std::uint64_t count = 0;
  Monomial m;
  auto visit = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[static_cast<std::size_t>(v)]; ++e) {
      m.set(v, e);
      if (divisible(m)) break;
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  visit(visit, 0);
  return count;
}

std::uint64_t degree_zero_dim_projective(const Ideal& ideal, SplitMix64& rng, const GroebnerLimits& limits) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("degree_zero_dim_projective needs a homogeneous ideal");
  const auto& ring = ideal.ring();
  MPoly chart = random_linear_form(rng, ring) - MPoly::constant(ring, 1);
  GBasis gb = buchberger(ideal + Ideal(ring, {chart}), MonomialOrder::degrevlex(), limits);
  if (gb.is_unit()) return 0;
  try {
    return count_standard_monomials(gb);
  } catch (const DimensionError&) {
    throw DimensionError("projective scheme is not zero-dimensional in the chosen chart");
  }
}

}  // namespace polarcsm
