#pragma once

#include <array>
#include <optional>
#include <vector>

#include "thetalab/f2/two_torsion.hpp"

namespace thetalab::f2 {

THETALAB_DEFINE_ERROR(NotKlein);

/// {0, eta1, eta2, eta1 + eta2}.
class KleinSubgroup {
 public:
  /// NotKlein unless eta1, eta2 are distinct and nonzero; GenusMismatch across genera.
  KleinSubgroup(const TwoTorsionClass& eta1, const TwoTorsionClass& eta2);

  int genus() const { return eta1_.genus(); }
  const TwoTorsionClass& eta1() const { return eta1_; }
  const TwoTorsionClass& eta2() const { return eta2_; }
  TwoTorsionClass eta3() const { return eta1_ + eta2_; }
  /// The three nonzero elements, sorted by key.
  std::array<TwoTorsionClass, 3> nonzero() const;
  bool contains(const TwoTorsionClass& x) const;
  bool is_isotropic() const { return weil(eta1_, eta2_) == 0; }
  std::string str() const;  // "<{1,2},{1,3}>"

  /// Same subgroup, regardless of the generators used.
  bool operator==(const KleinSubgroup& o) const { return nonzero() == o.nonzero(); }

 private:
  TwoTorsionClass eta1_, eta2_;
};

enum class KleinVerdict { Hyperelliptic, NotHyperelliptic, Undetermined };
const char* to_string(KleinVerdict v);

/// Isotropic: NotHyperelliptic. Non-isotropic with every nonzero element a
/// Weierstrass difference: Hyperelliptic. Otherwise Undetermined.
KleinVerdict classify_klein_cover(const KleinSubgroup& G);

/// Every Klein subgroup of E_g, each once, in a deterministic order.
std::vector<KleinSubgroup> all_klein_subgroups(int g, int max_genus = 4);

struct KleinCensus {
  int genus = 0;
  long total = 0;
  long isotropic = 0;
  long non_isotropic = 0;
  long hyperelliptic = 0;
  long not_hyperelliptic = 0;
  long undetermined = 0;
};

/// Exhaustive count over 2-dimensional subspaces; TooLarge above max_genus.
KleinCensus enumerate_klein(int g, int max_genus = 4);

/// Number of k-dimensional subspaces of F2^n (Gaussian binomial at q = 2).
long gaussian_binomial2(int n, int k);

/// General F2-subspace of E_g given by a basis.
class Subspace {
 public:
  Subspace(int g, std::vector<TwoTorsionClass> basis);
  int genus() const { return g_; }
  int dimension() const { return int(basis_.size()); }
  const std::vector<TwoTorsionClass>& basis() const { return basis_; }
  std::vector<TwoTorsionClass> elements() const;  // sorted by key
  bool is_isotropic() const;
  /// NotKlein unless dimension() == 2.
  KleinSubgroup to_klein() const;
  bool operator==(const Subspace& o) const { return elements() == o.elements(); }

 private:
  int g_;
  std::vector<TwoTorsionClass> basis_;  // reduced, independent
};

/// {x : e(x, G) = 0}; dimension 2g - 2, a Klein subgroup when g = 2.
Subspace orthogonal_complement(const KleinSubgroup& G);
Subspace orthogonal_complement(const Subspace& V);

struct Z23Witness {
  std::array<TwoTorsionClass, 3> generators;
  std::optional<KleinSubgroup> isotropic;
};

struct Z23Report {
  int genus = 0;
  long subgroups = 0;
  long with_isotropic = 0;
  std::vector<Z23Witness> witnesses;
  bool passed() const { return subgroups > 0 && with_isotropic == subgroups; }
};

/// Enumerates every subgroup of E_g isomorphic to Z2^3 and finds an isotropic
/// Klein subgroup inside each. TooLarge above max_genus.
Z23Report z23_contains_isotropic(int g, int max_genus = 3);

}  // namespace thetalab::f2
