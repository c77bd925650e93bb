#include "thetalab/f2/klein.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

namespace thetalab::f2 {

namespace {

// Keys of all classes; keys are even subsets of {1..2g+1}.
std::vector<Mask> all_keys(int g) {
  std::vector<Mask> keys;
  for (Mask k = 1; k < (Mask{1} << (2 * g + 1)); ++k)
    if (std::popcount(k) % 2 == 0) keys.push_back(k);
  return keys;
}

int weil_keys(Mask a, Mask b) { return std::popcount(a & b) & 1; }

void check_enumerable(int g, int max_genus) {
  if (g < 1) throw OutOfRange("genus must be positive");
  if (g > max_genus) throw TooLarge(fmt::format("genus {} exceeds enumeration cap {}", g, max_genus));
}

}  // namespace

KleinSubgroup::KleinSubgroup(const TwoTorsionClass& eta1, const TwoTorsionClass& eta2)
    : eta1_(eta1), eta2_(eta2) {
  if (eta1.genus() != eta2.genus()) throw GenusMismatch("classes of different genera");
  if (eta1.is_zero() || eta2.is_zero() || eta1 == eta2)
    throw NotKlein("generators must be distinct and nonzero");
}

std::array<TwoTorsionClass, 3> KleinSubgroup::nonzero() const {
  std::array<TwoTorsionClass, 3> e{eta1_, eta2_, eta3()};
  std::sort(e.begin(), e.end());
  return e;
}

bool KleinSubgroup::contains(const TwoTorsionClass& x) const {
  return x.is_zero() || x == eta1_ || x == eta2_ || x == eta3();
}

std::string KleinSubgroup::str() const { return fmt::format("<{},{}>", eta1_.str(), eta2_.str()); }

const char* to_string(KleinVerdict v) {
  switch (v) {
    case KleinVerdict::Hyperelliptic: return "Hyperelliptic";
    case KleinVerdict::NotHyperelliptic: return "NotHyperelliptic";
    case KleinVerdict::Undetermined: return "Undetermined";
  }
  return "?";
}

KleinVerdict classify_klein_cover(const KleinSubgroup& G) {
  if (G.is_isotropic()) return KleinVerdict::NotHyperelliptic;
  for (const auto& e : G.nonzero())
    if (!is_weierstrass_difference(e)) return KleinVerdict::Undetermined;
  return KleinVerdict::Hyperelliptic;
}

std::vector<KleinSubgroup> all_klein_subgroups(int g, int max_genus) {
  check_enumerable(g, max_genus);
  // Each subgroup once: a < b < a ^ b.
  std::vector<KleinSubgroup> out;
  const auto keys = all_keys(g);
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      const Mask a = keys[i], b = keys[j];
      if ((a ^ b) < b) continue;
      out.emplace_back(TwoTorsionClass::from_key(g, a), TwoTorsionClass::from_key(g, b));
    }
  return out;
}

KleinCensus enumerate_klein(int g, int max_genus) {
  check_enumerable(g, max_genus);
  const auto keys = all_keys(g);
  const long n = long(keys.size());
  long total = 0, iso = 0, hyp = 0, undet = 0;
  // Order-independent sums, so the partition across threads does not matter.
#pragma omp parallel for schedule(dynamic) reduction(+ : total, iso, hyp, undet)
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      const Mask a = keys[i], b = keys[j];
      if ((a ^ b) < b) continue;
      ++total;
      KleinSubgroup G(TwoTorsionClass::from_key(g, a), TwoTorsionClass::from_key(g, b));
      switch (classify_klein_cover(G)) {
        case KleinVerdict::NotHyperelliptic: ++iso; break;
        case KleinVerdict::Hyperelliptic: ++hyp; break;
        case KleinVerdict::Undetermined: ++undet; break;
      }
    }
  }
  KleinCensus c;
  c.genus = g;
  c.total = total;
  c.isotropic = iso;
  c.non_isotropic = total - iso;
  c.hyperelliptic = hyp;
  c.not_hyperelliptic = iso;
  c.undetermined = undet;
  return c;
}

long gaussian_binomial2(int n, int k) {
  if (k < 0 || k > n) return 0;
  long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1L << (n - i)) - 1;
    den *= (1L << (i + 1)) - 1;
  }
  return num / den;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(int g, std::vector<TwoTorsionClass> basis) : g_(g) {
  // Keep an independent subset (greedy), checking genus along the way.
  std::vector<Mask> span{0};
  for (const auto& b : basis) {
    if (b.genus() != g) throw GenusMismatch("basis vector of another genus");
    if (std::find(span.begin(), span.end(), b.key()) != span.end()) continue;
    basis_.push_back(b);
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ b.key());
  }
}

std::vector<TwoTorsionClass> Subspace::elements() const {
  std::vector<Mask> span{0};
  for (const auto& b : basis_) {
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ b.key());
  }
  std::sort(span.begin(), span.end());
  std::vector<TwoTorsionClass> out;
  out.reserve(span.size());
  for (Mask k : span) out.push_back(TwoTorsionClass::from_key(g_, k));
  return out;
}

bool Subspace::is_isotropic() const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (weil(basis_[i], basis_[j])) return false;
  return true;
}

KleinSubgroup Subspace::to_klein() const {
  if (dimension() != 2) throw NotKlein(fmt::format("subspace has dimension {}", dimension()));
  return KleinSubgroup(basis_[0], basis_[1]);
}

Subspace orthogonal_complement(const Subspace& V) {
  const int g = V.genus();
  // Coordinates in the basis b_k = {1, k + 2}, k = 0..2g-1; each constraint
  // e(x, v) = 0 is one row over F2. Solve by elimination on bitmask rows.
  const int n = 2 * g;
  auto basis_key = [](int k) { return Mask{1} | (Mask{1} << (k + 1)); };
  std::vector<Mask> rows;
  for (const auto& v : V.basis()) {
    Mask r = 0;
    for (int k = 0; k < n; ++k)
      if (weil_keys(basis_key(k), v.key())) r |= Mask{1} << k;
    rows.push_back(r);
  }
  // Reduced row echelon form.
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p] >> col & 1u)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] >> col & 1u)) rows[i] ^= rows[rank];
    pivots.push_back(col);
    ++rank;
  }
  std::vector<TwoTorsionClass> null_basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Mask coords = Mask{1} << free;
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r] >> free & 1u) coords |= Mask{1} << pivots[r];
    Mask key = 0;
    for (int k = 0; k < n; ++k)
      if (coords >> k & 1u) key ^= basis_key(k);
    null_basis.push_back(TwoTorsionClass::from_key(g, key));
  }
  return Subspace(g, std::move(null_basis));
}

Subspace orthogonal_complement(const KleinSubgroup& G) {
  return orthogonal_complement(Subspace(G.genus(), {G.eta1(), G.eta2()}));
}

// ---------------------------------------------------------------------------

Z23Report z23_contains_isotropic(int g, int max_genus) {
  check_enumerable(g, max_genus);
  Z23Report report;
  report.genus = g;
  const auto keys = all_keys(g);
  // Each subspace once, via its greedy-minimal basis: a is the least nonzero
  // element, b the least outside <a>, c the least outside <a, b>.
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const Mask a = keys[i];
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      const Mask b = keys[j];
      if ((a ^ b) < b) continue;
      for (std::size_t k = j + 1; k < keys.size(); ++k) {
        const Mask c = keys[k];
        if ((c ^ a) < c || (c ^ b) < c || (c ^ a ^ b) < c || c == (a ^ b)) continue;
        Z23Witness w{{TwoTorsionClass::from_key(g, a), TwoTorsionClass::from_key(g, b),
                      TwoTorsionClass::from_key(g, c)},
                     std::nullopt};
        const std::array<Mask, 7> elems{a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c};
        for (std::size_t p = 0; p < 7 && !w.isotropic; ++p)
          for (std::size_t q = p + 1; q < 7; ++q)
            if (weil_keys(elems[p], elems[q]) == 0) {
              w.isotropic.emplace(TwoTorsionClass::from_key(g, elems[p]),
                                  TwoTorsionClass::from_key(g, elems[q]));
              break;
            }
        ++report.subgroups;
        if (w.isotropic) ++report.with_isotropic;
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  return report;
}

}  // namespace thetalab::f2
