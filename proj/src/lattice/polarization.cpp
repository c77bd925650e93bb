#include "thetalab/lattice/polarization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace thetalab::lattice {

namespace {

bool is_integer(const Rational& q) { return q.denominator() == 1; }

// Mixed int/rational == recurses under C++20 rewritten comparisons; test the numerator.
bool is_zero(const Rational& q) { return q.numerator() == 0; }

Rational rdet(RMat m) {
  Rational det = 1;
  for (int k = 0; k < 4; ++k) {
    int p = k;
    while (p < 4 && is_zero(m[p][k])) ++p;
    if (p == 4) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < 4; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::int64_t mod2(std::int64_t n) { return ((n % 2) + 2) % 2; }

}  // namespace

RMat identity_rmat() {
  RMat m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

RMat to_rmat(const IntMatrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw std::invalid_argument("expected a 4x4 matrix");
  RMat m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = a(i, j);
  return m;
}

RMat operator*(const RMat& a, const RMat& b) {
  RMat p{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (is_zero(a[i][k])) continue;
      for (int j = 0; j < 4; ++j) p[i][j] += a[i][k] * b[k][j];
    }
  return p;
}

RMat transpose(const RMat& a) {
  RMat t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[j][i] = a[i][j];
  return t;
}

// ---------------------------------------------------------------------------

AlternatingForm::AlternatingForm(const RMat& gram) : gram_(gram) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (gram[i][j] != -gram[j][i]) throw std::invalid_argument("form is not alternating");
}

AlternatingForm AlternatingForm::standard() {
  RMat j{};
  j[0][2] = j[1][3] = 1;
  j[2][0] = j[3][1] = -1;
  return AlternatingForm(j);
}

Rational AlternatingForm::operator()(const RVec& x, const RVec& y) const {
  Rational s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(gram_[i][j])) s += x[i] * gram_[i][j] * y[j];
  return s;
}

AlternatingForm AlternatingForm::scaled(Rational c) const {
  RMat g = gram_;
  for (auto& row : g)
    for (auto& e : row) e *= c;
  return AlternatingForm(g);
}

RMat AlternatingForm::gram_in(const RMat& b) const { return transpose(b) * gram_ * b; }

RationalLattice::RationalLattice(const RMat& basis) : basis_(basis) {
  if (is_zero(rdet(basis))) throw Degenerate("lattice basis is singular");
}

RationalLattice RationalLattice::reference() { return RationalLattice(identity_rmat()); }

RVec RationalLattice::column(int j) const {
  return {basis_[0][j], basis_[1][j], basis_[2][j], basis_[3][j]};
}

Rational RationalLattice::covolume() const { return abs(rdet(basis_)); }

// ---------------------------------------------------------------------------

unsigned half_mask(const RVec& x) {
  unsigned mask = 0;
  for (int i = 0; i < 4; ++i) {
    Rational twice = x[i] * 2;
    if (!is_integer(twice)) throw NotHalfTorsion("vector is not in (1/2)Z^4");
    if (mod2(twice.numerator())) mask |= 1u << i;
  }
  return mask;
}

RVec half_vector(unsigned mask) {
  RVec v{};
  for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1u) ? Rational(1, 2) : Rational(0);
  return v;
}

HalfTorsionSubgroup::HalfTorsionSubgroup(std::vector<RVec> generators)
    : generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (half_mask(g) == 0) throw NotHalfTorsion("generator is zero modulo Z^4");
}

HalfTorsionSubgroup HalfTorsionSubgroup::from_masks(const std::vector<unsigned>& masks) {
  std::vector<RVec> gens;
  for (unsigned m : masks) gens.push_back(half_vector(m & 15u));
  return HalfTorsionSubgroup(std::move(gens));
}

std::vector<unsigned> HalfTorsionSubgroup::element_masks() const {
  std::vector<unsigned> span{0};
  for (const auto& g : generators_) {
    unsigned m = half_mask(g);
    if (std::find(span.begin(), span.end(), m) != span.end()) continue;
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ m);
  }
  std::sort(span.begin(), span.end());
  return span;
}

int HalfTorsionSubgroup::rank() const {
  int r = 0;
  for (std::size_t n = element_masks().size(); n > 1; n >>= 1) ++r;
  return r;
}

std::string PolarizationType::str() const { return fmt::format("({},{})", d1, d2); }

// ---------------------------------------------------------------------------

PolarizationType smith_type(const AlternatingForm& form, const RationalLattice& lat) {
  RMat g = form.gram_in(lat.basis());
  IntMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (!is_integer(g[i][j])) throw NotIntegral("form is not integral on the lattice");
      m(i, j) = g[i][j].numerator();
    }
  if (determinant(m) == 0) throw Degenerate("form is degenerate on the lattice");
  auto d = smith_diagonal(m);
  // A skew form has elementary divisors in equal pairs.
  if (d[0] != d[1] || d[2] != d[3]) throw std::logic_error("unpaired elementary divisors");
  return {d[0], d[2]};
}

RationalLattice overlattice(const HalfTorsionSubgroup& G) {
  // Work with 2 * Lambda' so everything is integral.
  const auto& gens = G.generators();
  IntMatrix m(4, 4 + int(gens.size()));
  for (int i = 0; i < 4; ++i) m(i, i) = 2;
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < 4; ++i) m(i, 4 + int(k)) = (gens[k][i] * 2).numerator();
  RMat b = to_rmat(column_hermite_basis(m));
  for (auto& row : b)
    for (auto& e : row) e /= 2;
  return RationalLattice(b);
}

QuotientPolarization quotient_polarization_type(const HalfTorsionSubgroup& G,
                                                const AlternatingForm& E) {
  if (smith_type(E, RationalLattice::reference()) != PolarizationType{1, 1})
    throw std::invalid_argument("E must be principal on Z^4");
  RationalLattice lat = overlattice(G);
  QuotientPolarization q;
  Rational index = Rational(1) / lat.covolume();
  q.index = index.numerator();
  for (std::int64_t c = 1; c <= (1 << 20); c *= 2) {
    RMat g = E.scaled(c).gram_in(lat.basis());
    bool integral = std::all_of(g.begin(), g.end(), [](const auto& row) {
      return std::all_of(row.begin(), row.end(), is_integer);
    });
    if (!integral) continue;
    q.multiplier = c;
    q.type = smith_type(E.scaled(c), lat);
    return q;
  }
  throw NotIntegral("no power-of-two multiplier makes the form integral");
}

int lattice_weil_pairing(const RVec& x, const RVec& y, const AlternatingForm& E) {
  half_mask(x);
  half_mask(y);
  RVec x2, y2;
  for (int i = 0; i < 4; ++i) {
    x2[i] = x[i] * 2;
    y2[i] = y[i] * 2;
  }
  Rational v = E(x2, y2);
  if (!is_integer(v)) throw NotIntegral("E is not integral on Z^4");
  return int(mod2(v.numerator()));
}

HalfTorsionSubgroup orthogonal_complement(const HalfTorsionSubgroup& G, const AlternatingForm& E) {
  std::vector<unsigned> perp;
  for (unsigned m = 1; m < 16; ++m) {
    bool ok = std::all_of(G.generators().begin(), G.generators().end(), [&](const RVec& g) {
      return lattice_weil_pairing(half_vector(m), g, E) == 0;
    });
    if (ok) perp.push_back(m);
  }
  // Greedy basis of the span.
  std::vector<unsigned> basis, span{0};
  for (unsigned m : perp) {
    if (std::find(span.begin(), span.end(), m) != span.end()) continue;
    basis.push_back(m);
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ m);
  }
  return HalfTorsionSubgroup::from_masks(basis);
}

// ---------------------------------------------------------------------------

std::vector<GenusVerdict> feasible_genera(int g_max) {
  if (g_max < 2) throw std::invalid_argument("g_max must be at least 2");
  std::vector<GenusVerdict> out;
  for (int g = 2; g <= g_max; ++g) {
    GenusVerdict v;
    v.genus = g;
    const int n = g - 1;
    const int target = 2 * g + 2;
    std::vector<std::string> misses;
    for (int d1 = 1; d1 * d1 <= n; ++d1) {
      if (n % d1 != 0 || (n / d1) % d1 != 0) continue;
      TypeVerdict t;
      t.type = {d1, n / d1};
      t.odd_count = (d1 % 2) + ((n / d1) % 2);
      const int step = 1 << (3 - t.odd_count);
      t.allowed = {8 - step, 8, 8 + step};
      t.qualifies = std::find(t.allowed.begin(), t.allowed.end(), target) != t.allowed.end();
      if (t.qualifies) {
        v.feasible = true;
      } else {
        misses.push_back(fmt::format("{} not in {{{},{},{}}} for {} (s={})", target, t.allowed[0],
                                     t.allowed[1], t.allowed[2], t.type.str(), t.odd_count));
      }
      v.types.push_back(std::move(t));
    }
    if (v.feasible) {
      for (const auto& t : v.types)
        if (t.qualifies) v.reason = fmt::format("{} in {{{},{},{}}} for {} (s={})", target,
                                                t.allowed[0], t.allowed[1], t.allowed[2],
                                                t.type.str(), t.odd_count);
    } else {
      v.reason.clear();
      for (std::size_t i = 0; i < misses.size(); ++i) v.reason += (i ? "; " : "") + misses[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

KGroup k_group_structure(const PolarizationType& t) {
  if (t.d1 < 1 || t.d2 < 1 || t.d2 % t.d1 != 0) throw std::invalid_argument("invalid polarization type");
  KGroup k;
  for (std::int64_t d : {t.d1, t.d1, t.d2, t.d2}) {
    if (d > 1) k.cyclic_factors.push_back(d);
    k.order *= d;
    k.two_torsion_order *= std::gcd(d, std::int64_t{2});
  }
  return k;
}

std::string KGroup::str() const {
  if (cyclic_factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < cyclic_factors.size(); ++i)
    s += fmt::format("{}Z{}", i ? " x " : "", cyclic_factors[i]);
  return s;
}

}  // namespace thetalab::lattice
