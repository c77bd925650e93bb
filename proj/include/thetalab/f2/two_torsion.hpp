#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab::f2 {

THETALAB_DEFINE_ERROR(OutOfRange);
THETALAB_DEFINE_ERROR(OddCardinality);
THETALAB_DEFINE_ERROR(GenusMismatch);
THETALAB_DEFINE_ERROR(ZeroClass);
THETALAB_DEFINE_ERROR(NotWeightTwo);
THETALAB_DEFINE_ERROR(TooLarge);

/// Subset of {1..2g+2}; bit i-1 is index i.
using Mask = std::uint64_t;

inline constexpr int kMaxGenus = 31;

/// A point of JH[2] for hyperelliptic H of genus g: an even subset of the
/// 2g+2 Weierstrass indices modulo complement.
class TwoTorsionClass {
 public:
  /// Throws OutOfRange for bits outside {1..2g+2} or a bad genus, OddCardinality for odd |bits|.
  TwoTorsionClass(int g, Mask bits);
  static TwoTorsionClass zero(int g);
  static TwoTorsionClass from_indices(int g, const std::vector<int>& indices);
  /// The representative not containing 2g+2; a bijection E_g -> even subsets of {1..2g+1}.
  static TwoTorsionClass from_key(int g, Mask key);

  int genus() const { return g_; }
  int n_points() const { return 2 * g_ + 2; }
  /// Canonical representative: smaller cardinality, ties go to the set containing 1.
  Mask bits() const;
  Mask key() const { return key_; }
  std::vector<int> indices() const;  // of the canonical representative, ascending
  int weight() const;                // cardinality of the canonical representative
  bool is_zero() const { return key_ == 0; }
  std::string str() const;  // "{1,2}"

  bool operator==(const TwoTorsionClass& o) const { return g_ == o.g_ && key_ == o.key_; }
  auto operator<=>(const TwoTorsionClass& o) const = default;

 private:
  TwoTorsionClass(int g, Mask key, int) : g_(g), key_(key) {}
  int g_ = 2;
  Mask key_ = 0;
};

Mask full_mask(int g);

TwoTorsionClass class_from_pair(int g, int i, int j);
/// Symmetric difference; GenusMismatch across genera.
TwoTorsionClass class_add(const TwoTorsionClass& s, const TwoTorsionClass& t);
inline TwoTorsionClass operator+(const TwoTorsionClass& s, const TwoTorsionClass& t) {
  return class_add(s, t);
}

/// |S cap T| mod 2.
int weil(const TwoTorsionClass& s, const TwoTorsionClass& t);

bool is_weierstrass_difference(const TwoTorsionClass& s);
/// ZeroClass for eta = 0.
bool double_cover_is_hyperelliptic(const TwoTorsionClass& eta);

/// All 2^(2g) classes in key order.
std::vector<TwoTorsionClass> all_classes(int g);

/// Parses "1,2" or "{1,2}". OutOfRange / OddCardinality / std::invalid_argument.
TwoTorsionClass parse_class(int g, std::string_view text);

}  // namespace thetalab::f2
