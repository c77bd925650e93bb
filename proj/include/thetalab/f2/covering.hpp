#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetalab/f2/two_torsion.hpp"

namespace thetalab::f2 {

/// Genus of an etale degree-n cover of a genus-g curve: n(g - 1) + 1.
int etale_cover_genus(int g, int n);

struct FibrePoint {
  std::string label;         // e.g. "w3'" / "w3''"
  bool fixed_by_iota = false;       // Weierstrass point of the cover
  bool fixed_by_iota_sigma = false; // fixed by the other lift of the involution
};

/// Weierstrass bookkeeping of the double cover defined by eta = {i, j}.
struct CoveringDatum {
  int base_genus = 0;
  int cover_genus = 0;
  TwoTorsionClass defining = TwoTorsionClass::zero(2);
  std::map<int, std::vector<FibrePoint>> weierstrass_fibres;  // base index -> two cover points

  std::vector<std::string> cover_weierstrass_points() const;  // fixed by the lifted iota
  std::vector<std::string> composite_fixed_points() const;    // fixed by iota composed with sigma
  /// 4g = 2(2g-1) + 2, cover genus matches the etale formula, fibres have 2 points each.
  bool consistent() const;
};

/// NotWeightTwo unless eta is a Weierstrass difference {i, j}.
CoveringDatum covering_weierstrass_distribution(const TwoTorsionClass& eta);

}  // namespace thetalab::f2
