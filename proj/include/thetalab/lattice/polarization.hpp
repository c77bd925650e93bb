#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "thetalab/error.hpp"
#include "thetalab/lattice/smith.hpp"

namespace thetalab::lattice {

THETALAB_DEFINE_ERROR(NotIntegral);
THETALAB_DEFINE_ERROR(Degenerate);
THETALAB_DEFINE_ERROR(NotHalfTorsion);

using Rational = boost::rational<std::int64_t>;
using RVec = std::array<Rational, 4>;
using RMat = std::array<std::array<Rational, 4>, 4>;

RMat identity_rmat();
RMat to_rmat(const IntMatrix& m);
RMat operator*(const RMat& a, const RMat& b);
RMat transpose(const RMat& a);

class AlternatingForm {
 public:
  /// Throws std::invalid_argument unless gram is skew-symmetric.
  explicit AlternatingForm(const RMat& gram);
  /// Standard symplectic J = [[0, I], [-I, 0]] on (e1, e2, f1, f2).
  static AlternatingForm standard();

  const RMat& gram() const { return gram_; }
  Rational operator()(const RVec& x, const RVec& y) const;
  AlternatingForm scaled(Rational c) const;
  /// Gram matrix in the basis given by the columns of b: b^T E b.
  RMat gram_in(const RMat& b) const;

 private:
  RMat gram_;
};

class RationalLattice {
 public:
  /// Columns generate the lattice. Throws Degenerate if singular.
  explicit RationalLattice(const RMat& basis);
  static RationalLattice reference();  // Z^4

  const RMat& basis() const { return basis_; }
  RVec column(int j) const;
  Rational covolume() const;  // |det basis|

 private:
  RMat basis_;
};

class HalfTorsionSubgroup {
 public:
  /// Each generator must lie in (1/2)Z^4 and not in Z^4 (else NotHalfTorsion).
  explicit HalfTorsionSubgroup(std::vector<RVec> generators);
  /// Subgroup from 4-bit masks: bit i set means coordinate i is 1/2.
  static HalfTorsionSubgroup from_masks(const std::vector<unsigned>& masks);

  const std::vector<RVec>& generators() const { return generators_; }
  /// F2-rank of the generators modulo Z^4.
  int rank() const;
  int order() const { return 1 << rank(); }
  /// Element masks (reduced modulo Z^4), including 0, sorted.
  std::vector<unsigned> element_masks() const;

 private:
  std::vector<RVec> generators_;
};

struct PolarizationType {
  std::int64_t d1 = 1, d2 = 1;
  bool operator==(const PolarizationType&) const = default;
  std::string str() const;
};

/// Reduction of a half-torsion vector to its 4-bit mask; NotHalfTorsion if 2x is not integral.
unsigned half_mask(const RVec& x);
RVec half_vector(unsigned mask);

/// Elementary divisors (d1, d2) of the Gram matrix of `form` in the basis of
/// `lat`. NotIntegral, Degenerate.
PolarizationType smith_type(const AlternatingForm& form, const RationalLattice& lat);

/// Lambda' = Z^4 + lifts of G, as a lattice in HNF basis.
RationalLattice overlattice(const HalfTorsionSubgroup& G);

struct QuotientPolarization {
  std::int64_t multiplier = 1;
  PolarizationType type;
  std::int64_t index = 1;  // [Lambda' : Lambda]
};

/// Minimal c in {1, 2, 4, ...} with cE integral on Lambda', and the type of cE there.
/// E must be principal on Z^4.
QuotientPolarization quotient_polarization_type(const HalfTorsionSubgroup& G,
                                                const AlternatingForm& E);

/// E(2x, 2y) mod 2 for half-torsion x, y. NotHalfTorsion.
int lattice_weil_pairing(const RVec& x, const RVec& y, const AlternatingForm& E);

/// Orthogonal complement of G in (1/2)Z^4 / Z^4 under the lattice Weil pairing.
HalfTorsionSubgroup orthogonal_complement(const HalfTorsionSubgroup& G, const AlternatingForm& E);

// ---------------------------------------------------------------------------

struct TypeVerdict {
  PolarizationType type;
  int odd_count = 0;                    // s
  std::vector<int> allowed;             // {8 - 2^(3-s), 8, 8 + 2^(3-s)}
  bool qualifies = false;
};

struct GenusVerdict {
  int genus = 0;
  bool feasible = false;
  std::vector<TypeVerdict> types;
  std::string reason;  // why it fails (or which type works)
};

/// For g = 2..g_max: every type with d1 | d2, d1 d2 = g - 1, tested against the
/// parity count 2g + 2 in {8, 8 +- 2^(3-s)}.
std::vector<GenusVerdict> feasible_genera(int g_max);

struct KGroup {
  std::vector<std::int64_t> cyclic_factors;  // nontrivial factors only
  std::int64_t order = 1;
  std::int64_t two_torsion_order = 1;
  /// Number of translates of a symmetric curve under K(L) up to K(L) cap A[2].
  std::int64_t translate_orbits() const { return order / two_torsion_order; }
  std::string str() const;
};

KGroup k_group_structure(const PolarizationType& t);

}  // namespace thetalab::lattice
