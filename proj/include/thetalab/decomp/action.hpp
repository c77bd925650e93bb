#pragma once

#include <array>
#include <string>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab::decomp {

THETALAB_DEFINE_ERROR(Inconsistent);
THETALAB_DEFINE_ERROR(NonIntegerGenus);

// Z2^3 = <iota, sigma, tau>; an element is a 3-bit mask
// (bit 0 iota, bit 1 sigma, bit 2 tau), so 0 is the identity.
using Element = unsigned;
inline constexpr Element kIota = 1, kSigma = 2, kTau = 4;

std::string element_name(Element a);  // "1", "s", "it", "ist", ...

/// Character of Z2^3, also a 3-bit mask: bit b set iff chi is -1 on the b-th generator.
struct CharacterLabel {
  unsigned mask = 0;
  static CharacterLabel from_signs(int iota, int sigma, int tau);
  int operator()(Element a) const;  // +1 / -1
  int sign_iota() const { return (*this)(kIota); }
  int sign_sigma() const { return (*this)(kSigma); }
  int sign_tau() const { return (*this)(kTau); }
  std::string str() const;  // "(-,+,+)" as (iota, sigma, tau)
  bool operator==(const CharacterLabel&) const = default;
};

std::array<CharacterLabel, 8> all_characters();

struct ActionData {
  int genus = 0;
  std::array<int, 8> fixed_counts{};  // indexed by Element; entry 0 unused

  /// The genus-5 curve in a general (1,4) surface: sigma, tau, st free, iota 12, i*k 4.
  static ActionData genus_five();
  /// Inconsistent on negative or odd counts, or odd branch totals over a subgroup.
  void validate() const;
};

/// trace of a nontrivial automorphism on H^1: 2 - |Fix|.
int lefschetz_trace(int fixed_points);

/// m_chi = (1/8)[2g + sum_{a != 1} (2 - |Fix a|) chi(a)], indexed by character mask.
/// Inconsistent if some m_chi is negative, odd or fractional.
std::array<int, 8> isotypic_multiplicities(const ActionData& a);

/// A subgroup of Z2^3 as a sorted element list.
struct Subgroup {
  std::vector<Element> elements;
  std::string name() const;  // "<s,it>", "1", ...
  bool contains(Element a) const;
  int order() const { return int(elements.size()); }
};

Subgroup make_subgroup(const std::vector<Element>& generators);
/// All 16 subgroups, ordered by order then elements.
std::vector<Subgroup> all_subgroups();

/// Riemann-Hurwitz: 2g - 2 = |K|(2g_K - 2) + sum_{a in K, a != 1} |Fix a|. NonIntegerGenus.
int quotient_genus(const ActionData& a, const Subgroup& K);
/// sum over characters trivial on K of m_chi / 2.
int character_sum_genus(const std::array<int, 8>& m, const Subgroup& K);

}  // namespace thetalab::decomp
