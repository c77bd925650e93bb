#include "thetalab/f2/covering.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace thetalab::f2 {

int etale_cover_genus(int g, int n) {
  if (g < 1 || n < 1) throw std::invalid_argument("genus and degree must be positive");
  return n * (g - 1) + 1;
}

CoveringDatum covering_weierstrass_distribution(const TwoTorsionClass& eta) {
  if (eta.is_zero() || eta.weight() != 2)
    throw NotWeightTwo(fmt::format("{} is not a difference of two Weierstrass points", eta.str()));
  const int g = eta.genus();
  const auto ij = eta.indices();
  CoveringDatum d;
  d.base_genus = g;
  d.cover_genus = etale_cover_genus(g, 2);
  d.defining = eta;
  for (int k = 1; k <= 2 * g + 2; ++k) {
    // Over w_i, w_j the fibre is swapped by the lift of iota that fixes the
    // other fibres, so those points are fixed by the other lift instead.
    const bool special = (k == ij[0] || k == ij[1]);
    for (const char* prime : {"'", "''"}) {
      d.weierstrass_fibres[k].push_back(
          FibrePoint{fmt::format("w{}{}", k, prime), !special, special});
    }
  }
  return d;
}

std::vector<std::string> CoveringDatum::cover_weierstrass_points() const {
  std::vector<std::string> out;
  for (const auto& [k, fibre] : weierstrass_fibres)
    for (const auto& p : fibre)
      if (p.fixed_by_iota) out.push_back(p.label);
  return out;
}

std::vector<std::string> CoveringDatum::composite_fixed_points() const {
  std::vector<std::string> out;
  for (const auto& [k, fibre] : weierstrass_fibres)
    for (const auto& p : fibre)
      if (p.fixed_by_iota_sigma) out.push_back(p.label);
  return out;
}

bool CoveringDatum::consistent() const {
  const int g = base_genus;
  if (cover_genus != etale_cover_genus(g, 2)) return false;
  if (int(weierstrass_fibres.size()) != 2 * g + 2) return false;
  for (const auto& [k, fibre] : weierstrass_fibres) {
    if (fibre.size() != 2) return false;
    for (const auto& p : fibre)
      if (p.fixed_by_iota == p.fixed_by_iota_sigma) return false;  // exactly one lift fixes it
  }
  const int w = int(cover_weierstrass_points().size());
  return w == 4 * g && w == 2 * cover_genus + 2 && composite_fixed_points().size() == 4;
}

}  // namespace thetalab::f2
