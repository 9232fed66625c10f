#pragma once

#include <cstdint>
#include <vector>

#include "polarcsm/intpoly.hpp"
#include "polarcsm/polar.hpp"

namespace polarcsm {

/// An integer polynomial of degree at most n tagged with the ambient P^n.
/// The tag keeps gamma, chi and g polynomials from being mixed up.
template <class Tag>
class AmbientPoly {
 public:
  AmbientPoly(int n, IntPoly p) : n_(n), p_(std::move(p)) {
    if (n_ < 0) throw std::invalid_argument("ambient dimension must be non-negative");
    if (p_.degree() > n_) throw std::invalid_argument("polynomial degree exceeds ambient dimension");
  }

  int n() const { return n_; }
  const IntPoly& poly() const { return p_; }
  std::int64_t coeff(std::size_t i) const { return p_.coeff(i); }
  std::vector<std::int64_t> coeffs() const { return p_.coeffs_padded(static_cast<std::size_t>(n_) + 1); }

  friend AmbientPoly operator+(const AmbientPoly& a, const AmbientPoly& b) {
    check_same(a, b);
    return AmbientPoly(a.n_, a.p_ + b.p_);
  }
  friend AmbientPoly operator-(const AmbientPoly& a, const AmbientPoly& b) {
    check_same(a, b);
    return AmbientPoly(a.n_, a.p_ - b.p_);
  }
  friend bool operator==(const AmbientPoly&, const AmbientPoly&) = default;

 private:
  static void check_same(const AmbientPoly& a, const AmbientPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("class polynomials live in different ambient spaces");
  }

  int n_;
  IntPoly p_;
};

/// gamma(t) = sum c_r t^r, the CSM class pushed to P^n with [P^r] -> t^r.
using ClassPoly = AmbientPoly<struct ClassPolyTag>;
/// chi(t) = sum chi(X cap r general hyperplanes) (-t)^r, stored signed.
using ChiPoly = AmbientPoly<struct ChiPolyTag>;
/// g(t) = sum_j g_j t^(n-j).
using GPoly = AmbientPoly<struct GPolyTag>;

/// (t p(-t-1) + p(0)) / (t+1), evaluated as p(0) - t p_+(-t-1) where
/// p = p(0) + t p_+.
IntPoly involute(const IntPoly& p);

ChiPoly chi_from_gamma(const ClassPoly& gamma);
ClassPoly gamma_from_chi(const ChiPoly& chi);

/// Class of the complement: (-1)^n g(-t-1).
ClassPoly gamma_from_g(const GPoly& g);
/// (-1)^n ((t+1) chi(t) - chi(0)) / t for the chi polynomial of a complement.
GPoly g_from_chi(const ChiPoly& chi);
GPoly g_from_gamma(const ClassPoly& gamma_complement);

GPoly g_poly(const DegreeVector& g);
DegreeVector degrees_of(const GPoly& g);

/// c(TP^n) = (1+h)^{n+1}: coefficient of t^r is binom(n+1, r+1).
ClassPoly gamma_Pn(int n);

std::int64_t euler_characteristic(const ClassPoly& gamma);

/// (chi_0, ..., chi_n) with chi_r the Euler characteristic of r general
/// hyperplane sections.
std::vector<std::int64_t> sectional_euler(const ChiPoly& chi);

/// Entry j is (-1)^j (chi(D cap L_j) - chi(D cap L_{j-1})) for general
/// linear subspaces L_j of dimension j; equals the polar degrees.
std::vector<std::int64_t> huh_numbers(const ChiPoly& chi_complement);

struct CsmResult {
  DegreeVector g;
  ClassPoly gamma_complement;
  ClassPoly gamma;
  ChiPoly chi;
  ChiPoly chi_complement;
};

/// All class data of S from its polar degrees.
CsmResult csm_from_degrees(const DegreeVector& g);

/// Polar degrees of the generators, then the class calculus.
CsmResult csm_subscheme(const std::vector<MPoly>& generators, const TrialConfig& cfg);

}  // namespace polarcsm
