#include "polarcsm/random.hpp"

namespace polarcsm {

MPoly random_linear_form(SplitMix64& rng, const RingPtr& ring) {
  for (;;) {
    std::vector<MPoly::Term> terms;
    for (int i = 0; i < ring->n_vars; ++i) {
      terms.push_back({random_coeff(rng, ring->field), Monomial::variable(i)});
    }
    MPoly form = MPoly::from_terms(ring, std::move(terms));
    if (!form.is_zero()) return form;
  }
}

MPoly random_combination(SplitMix64& rng, const std::vector<MPoly>& forms) {
  if (forms.empty()) throw std::invalid_argument("random combination of no forms");
  const RingPtr& ring = forms.front().ring();
  for (;;) {
    MPoly sum(ring);
    bool any = false;
    for (const auto& f : forms) {
      Coeff c = random_coeff(rng, ring->field);
      any = any || c != 0;
      sum += f.scaled(c);
    }
    if (any) return sum;
  }
}

}  // namespace polarcsm
