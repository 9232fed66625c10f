#include "polarcsm/arrangements.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarcsm/parse.hpp"

namespace polarcsm {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Row = std::vector<Rational>;

// Reduced row echelon basis of the span of `rows`.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  // Reduces v against the basis; returns the residue.
  Row residue(Row v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) v[c] -= f * basis_[k][c];
    }
    return v;
  }

  bool contains(const Row& v) const {
    Row r = residue(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
  }

  void add(const Row& v) {
    Row r = residue(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (it == r.end()) return;
    const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
    const Rational lead = r[pivot];
    for (auto& x : r) x /= lead;
    for (auto& b : basis_) {
      const Rational f = b[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) b[c] -= f * r[c];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(pivot);
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  std::size_t width_;
  std::vector<Row> basis_;
  std::vector<std::size_t> pivots_;
};

Row to_row(const std::vector<std::int64_t>& form) {
  Row r;
  for (auto c : form) r.emplace_back(c);
  return r;
}

}  // namespace

Arrangement::Arrangement(int n, std::vector<std::vector<std::int64_t>> forms) : n_(n), forms_(std::move(forms)) {
  if (n_ < 1 || n_ + 1 > kMaxVars) throw std::invalid_argument("arrangement ambient dimension out of range");
  if (forms_.empty()) throw std::invalid_argument("arrangement has no hyperplanes");
  if (forms_.size() > static_cast<std::size_t>(kMaxHyperplanes)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxHyperplanes) + " hyperplanes are supported");
  }
  const std::size_t width = static_cast<std::size_t>(n_) + 1;
  for (const auto& f : forms_) {
    if (f.size() != width) throw std::invalid_argument("linear form has the wrong number of coefficients");
    if (std::all_of(f.begin(), f.end(), [](std::int64_t c) { return c == 0; })) {
      throw std::invalid_argument("zero linear form in arrangement");
    }
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    RowSpace span(width);
    span.add(to_row(forms_[i]));
    for (std::size_t j = i + 1; j < forms_.size(); ++j) {
      if (span.contains(to_row(forms_[j]))) {
        throw std::invalid_argument("hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " are proportional");
      }
    }
  }
}

Arrangement Arrangement::from_text(int n, const std::vector<std::string>& forms) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& text : forms) {
    IntegerTerms terms = parse_integer_poly(text, n + 1);
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [c, m] : terms) {
      if (m.degree() != 1) throw std::invalid_argument("'" + text + "' is not a homogeneous linear form");
      row[static_cast<std::size_t>(std::countr_zero(m.support()))] = c;
    }
    rows.push_back(std::move(row));
  }
  return Arrangement(n, std::move(rows));
}

MPoly Arrangement::defining_polynomial(const RingPtr& ring) const {
  if (ring->n_vars != n_ + 1) throw std::invalid_argument("ring does not match arrangement dimension");
  MPoly product = MPoly::constant(ring, 1);
  for (const auto& f : forms_) {
    MPoly form(ring);
    for (std::size_t i = 0; i < f.size(); ++i) {
      form += MPoly::monomial(ring, ring->field.from_int(f[i]), Monomial::variable(static_cast<int>(i)));
    }
    product *= form;
  }
  return product;
}

IntersectionLattice build_lattice(const Arrangement& arrangement) {
  const std::size_t width = static_cast<std::size_t>(arrangement.n()) + 1;
  const std::size_t count = arrangement.size();
  std::vector<Row> rows;
  for (const auto& f : arrangement.forms()) rows.push_back(to_row(f));

  // Closure of a set of hyperplanes: every hyperplane whose form lies in
  // their span, i.e. which contains their intersection.
  auto close = [&](std::uint32_t mask, int& rank) {
    RowSpace span(width);
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (1u << i)) span.add(rows[i]);
    }
    rank = span.rank();
    std::uint32_t closed = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (span.contains(rows[i])) closed |= 1u << i;
    }
    return closed;
  };

  IntersectionLattice lattice;
  lattice.ambient_dim = static_cast<int>(width);
  lattice.flats.push_back({0, 0, static_cast<int>(width), 1});
  std::vector<std::uint32_t> layer{0};
  std::map<std::uint32_t, int> seen{{0u, 0}};
  while (!layer.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t flat : layer) {
      for (std::size_t h = 0; h < count; ++h) {
        if (flat & (1u << h)) continue;
        int rank = 0;
        std::uint32_t closed = close(flat | (1u << h), rank);
        if (seen.emplace(closed, rank).second) {
          next.push_back(closed);
          lattice.flats.push_back({closed, rank, static_cast<int>(width) - rank, 0});
        }
      }
    }
    layer = std::move(next);
  }

  std::stable_sort(lattice.flats.begin(), lattice.flats.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.hyperplanes < b.hyperplanes;
  });
  // mu(X) = -sum of mu(Y) over flats Y strictly below X; below means the
  // hyperplane set is a proper subset.
  for (std::size_t k = 1; k < lattice.flats.size(); ++k) {
    std::int64_t sum = 0;
    for (std::size_t m = 0; m < k; ++m) {
      const auto& y = lattice.flats[m];
      const auto& x = lattice.flats[k];
      if (y.rank < x.rank && (y.hyperplanes & ~x.hyperplanes) == 0) sum += y.moebius;
    }
    lattice.flats[k].moebius = -sum;
  }
  return lattice;
}

IntPoly char_poly(const IntersectionLattice& lattice) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(lattice.ambient_dim) + 1, 0);
  for (const auto& f : lattice.flats) c[static_cast<std::size_t>(f.dim)] += f.moebius;
  return IntPoly(std::move(c));
}

IntPoly char_poly(const Arrangement& arrangement) { return char_poly(build_lattice(arrangement)); }

IntPoly reduced_char_poly(const IntPoly& p) { return p.divide_by_linear(1); }

ChiPoly chi_from_charpoly(const IntPoly& reduced, int n) {
  IntPoly numerator = IntPoly::t() * reduced.compose_affine(-1, 0) + IntPoly::constant(reduced.eval(1));
  return ChiPoly(n, numerator.divide_by_linear(-1));
}

IntPoly charpoly_from_chi(const ChiPoly& chi) {
  IntPoly numerator = IntPoly({-1, 1}) * chi.poly().compose_affine(-1, 0) + IntPoly::constant(chi.coeff(0));
  return numerator.divide_by_t();
}

IntPoly charpoly_algebraic(const Arrangement& arrangement, const TrialConfig& cfg) {
  RingPtr ring = make_ring(arrangement.n() + 1, cfg.prime);
  MPoly product = arrangement.defining_polynomial(ring);
  CsmResult csm = csm_subscheme({product}, cfg);
  return csm.gamma_complement.poly().compose_affine(1, -1);
}

}  // namespace polarcsm
