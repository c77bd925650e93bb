// One line per acceptance criterion; exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "thetalab/cli/commands.hpp"
#include "thetalab/decomp/decomposition.hpp"
#include "thetalab/f2/klein.hpp"
#include "thetalab/lattice/polarization.hpp"
#include "thetalab/theta/evaluator.hpp"
#include "thetalab/theta/sampling.hpp"
#include "thetalab/theta/surface.hpp"

using namespace thetalab;
using theta::cplx;
using theta::PeriodMatrix;
using theta::SurfacePoint;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PeriodMatrix random_Z(std::uint64_t seed) {
  theta::Rng rng(seed);
  return theta::random_period_matrix(rng, true);
}

// 1. Twelve odd 2-torsion zeros on 20 generic surfaces.
Outcome twelve_points() {
  const auto t0 = std::chrono::steady_clock::now();
  const theta::EvalSettings s{1e-10, 64};
  int good = 0;
  double worst_sep = INFINITY;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto sum = theta::summarize(theta::two_torsion_scan(random_Z(1000 + seed), s));
    worst_sep = std::min(worst_sep, sum.separation_ratio());
    if (sum.odd_vanishing == 12 && sum.non_vanishing == 4 && sum.separation_ratio() >= 1e4) ++good;
  }
  const double t = seconds_since(t0);
  return {good == 20 && t < 30.0,
          fmt::format("{}/20 surfaces with 12 odd + 4 non-vanishing, min separation {:.3g}, {:.2f} s", good,
                      worst_sep, t)};
}

// 2. Oddness and the basis parity relation.
Outcome parity() {
  double odd = 0, basis = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto rep = theta::parity_check(random_Z(2000 + seed), {}, 100, seed);
    odd = std::max(odd, rep.odd_residual);
    basis = std::max(basis, rep.basis_residual);
  }
  return {odd < 1e-9 && basis < 1e-9,
          fmt::format("max odd residual {:.2e}, basis residual {:.2e} (100 points x 5 surfaces)", odd, basis)};
}

// 3. Translations. The ratio checked here is the literal one, theta_A(v+w2)/theta_A(v).
Outcome translations() {
  double w1 = 0, raw = 0, normalized = 0, min_M = INFINITY;
  int admissible = INT32_MAX;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rep = theta::quasi_periodicity_check(random_Z(3000 + seed), {}, 50, seed);
    w1 = std::max(w1, rep.w1_residual);
    raw = std::max(raw, rep.raw_ratio_spread);
    normalized = std::max(normalized, rep.M_spread);
    min_M = std::min(min_M, std::abs(rep.M));
    admissible = std::min(admissible, rep.admissible);
  }
  return {w1 < 1e-9 && raw < 1e-8 && min_M > 0,
          fmt::format("w1 residual {:.2e}; raw w2 ratio spread {:.2e} (needs < 1e-8); "
                      "with exp(pi i v2) factor {:.2e}; min |M| {:.3g}; >= {} admissible samples",
                      w1, raw, normalized, min_M, admissible)};
}

// 4. Product surfaces.
Outcome product_case() {
  int good = 0;
  double worst = 0;
  theta::Rng rng(4000);
  for (int k = 0; k < 5; ++k) {
    const cplx t1 = theta::random_tau(rng), t2 = theta::random_tau(rng);
    auto rep = theta::product_case_components(t1, t2, {}, 50, k);
    auto sum = theta::summarize(rep.scan);
    for (const auto& c : rep.components) worst = std::max(worst, c.max_abs_theta);
    if (rep.passed() && rep.negative_passed && sum.odd_vanishing == 12 && sum.even_vanishing == 4) ++good;
  }
  return {good == 5, fmt::format("{}/5 pairs: five components, controls, 12/4 split; max |theta_A| {:.2e}",
                                 good, worst)};
}

// 5. (-1)-action on the basis.
Outcome minus_one() {
  double res = 0;
  bool dims = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto act = theta::minus_one_action(random_Z(5000 + seed), {}, 16, seed + 1);
    res = std::max(res, act.residual);
    dims = dims && act.minus_dimension == 1 && act.plus_dimension == 3;
  }
  return {res < 1e-8 && dims,
          fmt::format("max |matrix - (1 3)| {:.2e}, anti-invariant dimension {}", res, dims ? "1" : "wrong")};
}

// 6. Klein census at g = 2.
Outcome klein_census() {
  const auto t0 = std::chrono::steady_clock::now();
  auto c = f2::enumerate_klein(2);
  // Brute-force oracle: every ordered pair of distinct nonzero classes.
  std::set<std::set<f2::Mask>> oracle;
  long oracle_iso = 0;
  auto all = f2::all_classes(2);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.is_zero() || b.is_zero() || a == b) continue;
      if (oracle.insert({a.key(), b.key(), (a + b).key()}).second && f2::weil(a, b) == 0) ++oracle_iso;
    }
  int classifier_ok = 0;
  auto groups = f2::all_klein_subgroups(2);
  for (const auto& G : groups) {
    const auto v = f2::classify_klein_cover(G);
    const auto want = G.is_isotropic() ? f2::KleinVerdict::NotHyperelliptic : f2::KleinVerdict::Hyperelliptic;
    if (v == want) ++classifier_ok;
  }
  const double t = seconds_since(t0);
  const bool ok = c.total == 35 && c.isotropic == 15 && c.non_isotropic == 20 && long(oracle.size()) == 35 &&
                  oracle_iso == 15 && c.non_isotropic == 20 /* C(6,3) */ &&
                  f2::gaussian_binomial2(4, 2) == 35 && classifier_ok == 35 && groups.size() == 35 && t < 1.0;
  return {ok, fmt::format("total {} isotropic {} non-isotropic {}; oracle {}/{}; classifier {}/35; {:.3f} s",
                          c.total, c.isotropic, c.non_isotropic, oracle.size(), oracle_iso, classifier_ok, t)};
}

lattice::IntMatrix random_unimodular(std::mt19937_64& rng) {
  auto u = lattice::IntMatrix::identity(4);
  std::uniform_int_distribution<int> idx(0, 3), coef(-2, 2), coin(0, 1);
  for (int s = 0; s < 12; ++s) {
    int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    if (coin(rng)) {
      const int q = coef(rng);
      for (int r = 0; r < 4; ++r) u(r, a) += q * u(r, b);
    } else {
      for (int r = 0; r < 4; ++r) std::swap(u(r, a), u(r, b));
    }
  }
  return u;
}

// 7. Quotient polarization types.
Outcome quotient_types() {
  using namespace lattice;
  const auto J = AlternatingForm::standard();
  std::mt19937_64 rng(7000);
  std::uniform_int_distribution<int> shift(-3, 3);
  int iso = 0, non = 0, iso_ok = 0, non_ok = 0, single_ok = 0, invariance_fail = 0;

  auto robust = [&](const std::vector<unsigned>& masks, const QuotientPolarization& q) {
    const auto L = overlattice(HalfTorsionSubgroup::from_masks(masks));
    const auto E = J.scaled(Rational(q.multiplier));
    for (int t = 0; t < 50; ++t) {
      RationalLattice B(L.basis() * to_rmat(random_unimodular(rng)));
      if (!(smith_type(E, B) == q.type)) ++invariance_fail;
    }
    // Other lifts: add integer vectors to each generator.
    for (int t = 0; t < 5; ++t) {
      std::vector<RVec> gens;
      for (unsigned m : masks) {
        RVec x = half_vector(m);
        for (auto& c : x) c += shift(rng);
        gens.push_back(x);
      }
      auto q2 = quotient_polarization_type(HalfTorsionSubgroup(gens), J);
      if (!(q2.type == q.type) || q2.multiplier != q.multiplier) ++invariance_fail;
    }
  };

  std::set<std::vector<unsigned>> seen;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b) {
      auto G = HalfTorsionSubgroup::from_masks({a, b});
      if (!seen.insert(G.element_masks()).second) continue;
      const auto q = quotient_polarization_type(G, J);
      if (lattice_weil_pairing(half_vector(a), half_vector(b), J) == 0) {
        ++iso;
        if (q.type == PolarizationType{1, 1}) ++iso_ok;
      } else {
        ++non;
        if (q.type == PolarizationType{1, 4}) ++non_ok;
      }
      robust({a, b}, q);
    }
  for (unsigned a = 1; a < 16; ++a) {
    const auto q = quotient_polarization_type(HalfTorsionSubgroup::from_masks({a}), J);
    if (q.type == PolarizationType{1, 2}) ++single_ok;
    robust({a}, q);
  }
  return {iso == 15 && non == 20 && iso_ok == 15 && non_ok == 20 && single_ok == 15 && invariance_fail == 0,
          fmt::format("isotropic {}/{} -> (1,1), non-isotropic {}/{} -> (1,4), singles {}/15 -> (1,2), "
                      "{} invariance failures",
                      iso_ok, iso, non_ok, non, single_ok, invariance_fail)};
}

// 8. Feasible genera.
Outcome genera() {
  auto v = lattice::feasible_genera(20);
  std::vector<std::string> feasible;
  for (const auto& g : v)
    if (g.feasible) {
      for (const auto& t : g.types)
        if (t.qualifies) feasible.push_back(fmt::format("{}:{}", g.genus, t.type.str()));
    }
  const std::string got = fmt::format("{}", fmt::join(feasible, " "));
  auto rejected = [&](int g) {
    for (const auto& x : v)
      if (x.genus == g) return !x.feasible && !x.reason.empty();
    return false;
  };
  auto reason = [&](int g) {
    for (const auto& x : v)
      if (x.genus == g) return x.reason;
    return std::string();
  };
  return {got == "2:(1,1) 3:(1,2) 4:(1,3) 5:(1,4)" && rejected(6) && rejected(7),
          fmt::format("{}; g=6 rejected: {}; g=7 rejected: {}", got, reason(6), reason(7))};
}

// 9. Isotypic decomposition of J C~.
Outcome decomposition() {
  using namespace decomp;
  const auto a = ActionData::genus_five();
  const auto m = isotypic_multiplicities(a);
  bool dims = true;
  for (const auto& chi : all_characters()) {
    if (chi.sign_iota() == +1) dims = dims && m[chi.mask] == 0;
  }
  const auto dim = [&](int i, int s, int t) { return m[CharacterLabel::from_signs(i, s, t).mask] / 2; };
  dims = dims && dim(-1, 1, 1) == 2 && dim(-1, -1, 1) == 1 && dim(-1, 1, -1) == 1 && dim(-1, -1, -1) == 1;

  struct Row {
    std::vector<Element> gens;
    int genus;
  };
  const std::vector<Row> table = {{{kSigma}, 3},         {{kIota | kSigma}, 2},
                                  {{kSigma, kTau}, 2},   {{kSigma, kIota | kTau}, 1},
                                  {{kIota}, 0},          {{kIota, kSigma, kTau}, 0}};
  // Symmetric cases: automorphisms fixing iota and permuting sigma, tau, sigma tau.
  const std::vector<std::pair<Element, Element>> images = {
      {kSigma, kTau}, {kTau, kSigma}, {kSigma, kSigma | kTau}, {kSigma | kTau, kSigma},
      {kTau, kSigma | kTau}, {kSigma | kTau, kTau}};
  auto apply = [](std::pair<Element, Element> phi, Element x) {
    Element y = x & kIota;
    if (x & kSigma) y ^= phi.first;
    if (x & kTau) y ^= phi.second;
    return y;
  };
  int rows_ok = 0, rows = 0;
  for (const auto& r : table)
    for (const auto& phi : images) {
      std::vector<Element> g;
      for (Element x : r.gens) g.push_back(apply(phi, x));
      ++rows;
      if (quotient_genus(a, make_subgroup(g)) == r.genus) ++rows_ok;
    }
  auto report = validate_presentation(assemble_decomposition(a), a);
  int failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  return {dims && rows_ok == rows && report.passed(),
          fmt::format("dims (2,1,1,1) {}; genus table {}/{} incl. symmetric cases; {} presentation/projector "
                      "checks, {} failed",
                      dims ? "ok" : "wrong", rows_ok, rows, report.checks.size(), failed)};
}

// 10. Lattice Weil pairing vs the even-subset pairing at g = 2.
Outcome dictionary() {
  // a1 = {1,2} -> e1/2, a2 = {4,5} -> e2/2, b1 = {2,3} -> f1/2, b2 = {5,6} -> f2/2.
  const std::array<f2::TwoTorsionClass, 4> basis = {f2::class_from_pair(2, 1, 2), f2::class_from_pair(2, 4, 5),
                                                    f2::class_from_pair(2, 2, 3), f2::class_from_pair(2, 5, 6)};
  auto phi = [&](unsigned mask) {
    auto x = f2::TwoTorsionClass::zero(2);
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1u) x = x + basis[i];
    return x;
  };
  std::set<f2::Mask> image;
  for (unsigned m = 0; m < 16; ++m) image.insert(phi(m).key());
  const auto J = lattice::AlternatingForm::standard();
  int agree = 0;
  for (unsigned x = 0; x < 16; ++x)
    for (unsigned y = 0; y < 16; ++y)
      if (lattice::lattice_weil_pairing(lattice::half_vector(x), lattice::half_vector(y), J) ==
          f2::weil(phi(x), phi(y)))
        ++agree;
  return {image.size() == 16 && agree == 256,
          fmt::format("bijective: {}; pairings agree on {}/256 pairs", image.size() == 16 ? "yes" : "no", agree)};
}

// 11. Gradients, truncation, reproducibility.
Outcome hygiene() {
  const double h = 1e-5;
  double fd = 0, doubling = 0;
  for (int k = 0; k < 20; ++k) {
    const PeriodMatrix Z = random_Z(11000 + k / 4);
    const theta::EvalSettings s{1e-12, 64};
    theta::ThetaEvaluator ev(Z, s);
    theta::Rng rng(k);
    const SurfacePoint v = theta::random_cell_point(rng, Z);
    const auto j = ev.theta_A_jet(v);
    const cplx d1 = (ev.theta_A(v + SurfacePoint{h, 0.0}) - ev.theta_A(v - SurfacePoint{h, 0.0})) / (2 * h);
    const cplx d2 = (ev.theta_A(v + SurfacePoint{0.0, h}) - ev.theta_A(v - SurfacePoint{0.0, h})) / (2 * h);
    const double scale = std::abs(j.grad[0]) + std::abs(j.grad[1]);
    fd = std::max({fd, std::abs(d1 - j.grad[0]) / scale, std::abs(d2 - j.grad[1]) / scale});
    for (int c : {1, 3}) {
      const auto chi = theta::ThetaCharacteristic::omega_multiple(c);
      const cplx wide = ev.jet_with_radius(chi, v, 2 * ev.value_radius(), false).value;
      doubling = std::max(doubling, std::abs(ev.eval(chi, v) - wide) / (s.tol * ev.envelope(v)));
    }
  }
  cli::RunConfig cfg;
  cfg.command = "theta_lab verify-surface --random --seed 42";
  cfg.seed = 42;
  cfg.samples = 20;
  const auto r1 = cli::cmd_verify_surface(cfg, random_Z(42));
  const auto r2 = cli::cmd_verify_surface(cfg, random_Z(42));
  bool same = true;
  for (auto f : {cli::Format::json, cli::Format::csv, cli::Format::md})
    same = same && cli::render(r1, f, false) == cli::render(r2, f, false);
  return {fd < 1e-6 && doubling < 1.0 && same,
          fmt::format("finite-difference rel. error {:.2e} at 20 points; radius doubling {:.2e} x tol; "
                      "same-seed reports identical: {}",
                      fd, doubling, same ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"twelve odd 2-torsion zeros", twelve_points},
      {"oddness and basis parity", parity},
      {"translations by w1, w2", translations},
      {"product case", product_case},
      {"(-1)-action", minus_one},
      {"Klein census g=2", klein_census},
      {"quotient polarization types", quotient_types},
      {"feasible genera", genera},
      {"decomposition of J C~", decomposition},
      {"lattice / F2 dictionary", dictionary},
      {"numerics hygiene", hygiene},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("threw: {}", e.what())};
    }
    if (!o.passed) ++failed;
    std::cout << fmt::format("criterion {:>2} {} {}: {}", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first,
                             o.detail)
              << std::endl;
  }
  std::cout << fmt::format("{}/{} criteria passed", criteria.size() - failed, criteria.size()) << std::endl;
  return failed == 0 ? 0 : 1;
}
