#include "polarcsm/classcalc.hpp"

namespace polarcsm {

namespace {

std::int64_t sign_pow(int n) { return n % 2 == 0 ? 1 : -1; }

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPoly involute(const IntPoly& p) {
  const std::int64_t p0 = p.coeff(0);
  IntPoly tail = (p - IntPoly::constant(p0)).divide_by_t();
  return IntPoly::constant(p0) - IntPoly::t() * tail.compose_affine(-1, -1);
}

ChiPoly chi_from_gamma(const ClassPoly& gamma) { return ChiPoly(gamma.n(), involute(gamma.poly())); }

ClassPoly gamma_from_chi(const ChiPoly& chi) { return ClassPoly(chi.n(), involute(chi.poly())); }

ClassPoly gamma_from_g(const GPoly& g) {
  return ClassPoly(g.n(), sign_pow(g.n()) * g.poly().compose_affine(-1, -1));
}

GPoly g_from_chi(const ChiPoly& chi) {
  const IntPoly& c = chi.poly();
  IntPoly numerator = IntPoly({1, 1}) * c - IntPoly::constant(c.coeff(0));
  return GPoly(chi.n(), sign_pow(chi.n()) * numerator.divide_by_t());
}

GPoly g_from_gamma(const ClassPoly& gamma_complement) {
  // gamma(t) = (-1)^n g(-t-1) inverts to g(t) = (-1)^n gamma(-t-1).
  return GPoly(gamma_complement.n(), sign_pow(gamma_complement.n()) * gamma_complement.poly().compose_affine(-1, -1));
}

GPoly g_poly(const DegreeVector& g) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(g.n) + 1, 0);
  for (int j = 0; j <= g.n; ++j) c[static_cast<std::size_t>(g.n - j)] = g.g[static_cast<std::size_t>(j)];
  return GPoly(g.n, IntPoly(std::move(c)));
}

DegreeVector degrees_of(const GPoly& g) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int j = 0; j <= g.n(); ++j) v[static_cast<std::size_t>(j)] = g.coeff(static_cast<std::size_t>(g.n() - j));
  return DegreeVector(g.n(), std::move(v));
}

ClassPoly gamma_Pn(int n) {
  if (n < 0) throw std::invalid_argument("gamma_Pn needs n >= 0");
  std::vector<std::int64_t> c;
  for (int r = 0; r <= n; ++r) c.push_back(binomial(n + 1, r + 1));
  return ClassPoly(n, IntPoly(std::move(c)));
}

std::int64_t euler_characteristic(const ClassPoly& gamma) { return gamma.coeff(0); }

std::vector<std::int64_t> sectional_euler(const ChiPoly& chi) {
  std::vector<std::int64_t> out;
  for (int r = 0; r <= chi.n(); ++r) out.push_back(sign_pow(r) * chi.coeff(static_cast<std::size_t>(r)));
  return out;
}

std::vector<std::int64_t> huh_numbers(const ChiPoly& chi_complement) {
  const int n = chi_complement.n();
  const auto sections = sectional_euler(chi_complement);
  // A general L_j is cut out by n - j hyperplanes.
  auto chi_on = [&](int j) -> std::int64_t { return j < 0 ? 0 : sections[static_cast<std::size_t>(n - j)]; };
  std::vector<std::int64_t> out;
  for (int j = 0; j <= n; ++j) out.push_back(sign_pow(j) * (chi_on(j) - chi_on(j - 1)));
  return out;
}

CsmResult csm_from_degrees(const DegreeVector& g) {
  ClassPoly complement = gamma_from_g(g_poly(g));
  ClassPoly gamma = gamma_Pn(g.n) - complement;
  return CsmResult{g, complement, gamma, chi_from_gamma(gamma), chi_from_gamma(complement)};
}

CsmResult csm_subscheme(const std::vector<MPoly>& generators, const TrialConfig& cfg) {
  return csm_from_degrees(polar_degrees_scheme(generators, cfg));
}

}  // namespace polarcsm
