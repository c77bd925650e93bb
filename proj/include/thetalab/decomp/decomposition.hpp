#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "thetalab/decomp/action.hpp"

namespace thetalab::decomp {

/// Element of Q[Z2^3], coefficients indexed by Element.
using GroupAlgebra = std::array<boost::rational<std::int64_t>, 8>;

GroupAlgebra ga_multiply(const GroupAlgebra& a, const GroupAlgebra& b);
GroupAlgebra ga_unit();
/// p_chi = (1/8) sum_a chi(a) a.
GroupAlgebra projector(const CharacterLabel& chi);

struct Slot {
  std::string label;                 // "A", "E_s", "A_s", ...
  int dim = 0;                       // as transcribed
  std::vector<int> restricted_type;  // as transcribed, e.g. {1,4} or {4}
  CharacterLabel character;          // isotypic component the slot sits in
  std::string type_str() const;      // "(1,4)"
};

struct DecompositionPresentation {
  std::string variety;  // "J C~", "J C_s", ...
  Subgroup quotient_by;
  int total_dim = 0;
  std::vector<Slot> slots;
};

struct Decomposition {
  std::array<int, 8> multiplicities{};
  DecompositionPresentation jacobian;
  std::vector<DecompositionPresentation> quotients;  // J C_s, J C_t, ... for the six quotients
};

/// Builds the transcribed presentations for this action; dimensions and types
/// are recorded data, checked afterwards by validate_presentation.
/// Inconsistent if the multiplicities themselves are inconsistent.
Decomposition assemble_decomposition(const ActionData& a);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

/// Projector identities, slot dimensions against isotypic dimensions and
/// quotient genera, Riemann-Hurwitz vs character sums on all 16 subgroups,
/// Prym dimension identities, and the (1,4) / (1,2) cross-check against the
/// lattice quotient types.
ValidationReport validate_presentation(const Decomposition& d, const ActionData& a);

}  // namespace thetalab::decomp
