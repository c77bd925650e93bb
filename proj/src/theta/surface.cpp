#include "thetalab/theta/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "thetalab/theta/kernels.hpp"
#include "thetalab/theta/sampling.hpp"

namespace thetalab::theta {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

const ThetaCharacteristic& omega(int k) {
  static const std::array<ThetaCharacteristic, 4> basis{
      ThetaCharacteristic::omega_multiple(0), ThetaCharacteristic::omega_multiple(1),
      ThetaCharacteristic::omega_multiple(2), ThetaCharacteristic::omega_multiple(3)};
  return basis.at(k);
}

double norm2(const std::array<cplx, 2>& g) { return std::sqrt(std::norm(g[0]) + std::norm(g[1])); }

// Evaluates and classifies theta_A at eval_points; records keep the scan
// index layout alpha1, alpha2, beta1, beta2 (most significant first).
std::vector<TorsionRecord> classify_points(const ThetaEvaluator& ev,
                                           const std::vector<SurfacePoint>& eval_points,
                                           const ScanThresholds& th) {
  std::vector<TorsionRecord> out(eval_points.size());
  std::vector<double> constituent(eval_points.size());
  for (std::size_t i = 0; i < eval_points.size(); ++i) {
    ThetaJet a = ev.jet(omega(3), eval_points[i]);
    ThetaJet b = ev.jet(omega(1), eval_points[i]);
    auto& r = out[i];
    r.alpha = {static_cast<int>(i >> 3) & 1, static_cast<int>(i >> 2) & 1};
    r.beta = {static_cast<int>(i >> 1) & 1, static_cast<int>(i) & 1};
    r.point = eval_points[i];
    r.abs_theta = std::abs(a.value - b.value);
    r.grad_norm = norm2({a.grad[0] - b.grad[0], a.grad[1] - b.grad[1]});
    constituent[i] = std::abs(a.value) + std::abs(b.value);
  }
  double scale = *std::max_element(constituent.begin(), constituent.end());
  double max_grad = 0;
  for (const auto& r : out) {
    if (r.abs_theta < th.value_ratio * scale) max_grad = std::max(max_grad, r.grad_norm);
  }
  for (auto& r : out) {
    if (r.abs_theta >= th.value_ratio * scale) {
      r.classification = TorsionClass::NonVanishing;
    } else if (r.grad_norm >= th.gradient_ratio * max_grad && max_grad > 0) {
      r.classification = TorsionClass::OddVanishing;
    } else {
      r.classification = TorsionClass::EvenVanishing;
    }
  }
  return out;
}

std::vector<SurfacePoint> torsion_points(const PeriodMatrix& Z, const SurfacePoint& offset) {
  std::vector<SurfacePoint> pts;
  pts.reserve(16);
  for (int i = 0; i < 16; ++i) {
    pts.push_back(two_torsion_point(Z, {(i >> 3) & 1, (i >> 2) & 1}, {(i >> 1) & 1, i & 1}) +
                  offset);
  }
  return pts;
}

template <class T>
double relative_spread(const std::vector<T>& xs) {
  if (xs.empty()) return 0;
  T mean{};
  for (const auto& x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double worst = 0;
  for (const auto& x : xs) worst = std::max(worst, std::abs(x - mean));
  return worst / std::abs(mean);
}

}  // namespace

// ---------------------------------------------------------------------------

SurfacePoint two_torsion_point(const PeriodMatrix& Z, std::array<int, 2> alpha,
                               std::array<int, 2> beta) {
  return lattice_vector(Z, {alpha[0] * 0.5, alpha[1] * 0.5}, {beta[0] * 0.5, beta[1] * 0.5});
}

SurfacePoint klein_w1() { return {0.0, 2.0}; }

SurfacePoint klein_w2(const PeriodMatrix& Z) { return {Z.z12 / 2.0, Z.z22 / 2.0}; }

double distance_mod_lattice(const SurfacePoint& p, const SurfacePoint& q, const PeriodMatrix& Z) {
  SurfacePoint d = p - q;
  Sym2 Yinv = Z.imag().inverse();
  Sym2 X = Z.real();
  auto a = Yinv.apply({d.v1.imag(), d.v2.imag()});
  auto xa = X.apply(a);
  std::array<double, 2> b{(d.v1.real() - xa[0]) / kPolarizationType[0],
                          (d.v2.real() - xa[1]) / kPolarizationType[1]};
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 81; ++i) {
    int di[4] = {i % 3 - 1, (i / 3) % 3 - 1, (i / 9) % 3 - 1, (i / 27) % 3 - 1};
    std::array<double, 2> m{std::round(a[0]) + di[0], std::round(a[1]) + di[1]};
    std::array<double, 2> n{std::round(b[0]) + di[2], std::round(b[1]) + di[3]};
    SurfacePoint r = d - lattice_vector(Z, m, n);
    best = std::min(best, std::sqrt(std::norm(r.v1) + std::norm(r.v2)));
  }
  return best;
}

const char* to_string(TorsionClass c) {
  switch (c) {
    case TorsionClass::OddVanishing: return "OddVanishing";
    case TorsionClass::EvenVanishing: return "EvenVanishing";
    case TorsionClass::NonVanishing: return "NonVanishing";
  }
  return "?";
}

std::vector<TorsionRecord> two_torsion_scan(const PeriodMatrix& Z, const EvalSettings& s,
                                            const SurfacePoint& offset,
                                            const ScanThresholds& thresholds) {
  ThetaEvaluator ev(Z, s);
  return classify_points(ev, torsion_points(Z, offset), thresholds);
}

double ScanSummary::separation_ratio() const {
  if (max_vanishing == 0) return std::numeric_limits<double>::infinity();
  return min_non_vanishing / max_vanishing;
}

ScanSummary summarize(const std::vector<TorsionRecord>& records) {
  ScanSummary s;
  s.min_non_vanishing = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    switch (r.classification) {
      case TorsionClass::OddVanishing: ++s.odd_vanishing; break;
      case TorsionClass::EvenVanishing: ++s.even_vanishing; break;
      case TorsionClass::NonVanishing: ++s.non_vanishing; break;
    }
    if (r.classification == TorsionClass::NonVanishing) {
      s.min_non_vanishing = std::min(s.min_non_vanishing, r.abs_theta);
    } else {
      s.max_vanishing = std::max(s.max_vanishing, r.abs_theta);
    }
  }
  if (s.non_vanishing == 0) s.min_non_vanishing = 0;
  return s;
}

// ---------------------------------------------------------------------------

ParityReport parity_check(const PeriodMatrix& Z, const EvalSettings& s, int n_samples,
                          std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("parity_check needs at least one sample");
  ThetaEvaluator ev(Z, s);
  const auto w1 = ThetaCharacteristic::omega_multiple(1);
  const auto w3 = ThetaCharacteristic::omega_multiple(3);
  Rng rng(seed);
  std::vector<SurfacePoint> pts(n_samples);
  for (auto& p : pts) p = random_cell_point(rng, Z);

  std::vector<double> odd(n_samples), basis(n_samples);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_samples; ++i) {
    const SurfacePoint& v = pts[i];
    const double env = ev.envelope(v);
    odd[i] = std::abs(ev.theta_A(v) + ev.theta_A(-v)) / env;
    basis[i] = std::abs(ev.eval(w1, -v) - ev.eval(w3, v)) / env;
  }
  ParityReport r;
  r.samples = n_samples;
  r.odd_residual = *std::max_element(odd.begin(), odd.end());
  r.basis_residual = *std::max_element(basis.begin(), basis.end());
  return r;
}

// ---------------------------------------------------------------------------

Eigen::Matrix4d expected_minus_one_permutation() {
  Eigen::Matrix4d P = Eigen::Matrix4d::Zero();
  P(0, 0) = 1;
  P(2, 2) = 1;
  P(1, 3) = 1;
  P(3, 1) = 1;
  return P;
}

MinusOneAction minus_one_action(const PeriodMatrix& Z, const EvalSettings& s, int n_points,
                                std::uint64_t seed) {
  if (n_points < 8) throw std::invalid_argument("minus_one_action needs at least 8 sample points");
  ThetaEvaluator ev(Z, s);
  Rng rng(seed);
  Eigen::MatrixXcd F(n_points, 4), G(n_points, 4);
  for (int i = 0; i < n_points; ++i) {
    SurfacePoint v = random_cell_point(rng, Z);
    double env = ev.envelope(v);
    for (int k = 0; k < 4; ++k) {
      F(i, k) = ev.eval(omega(k), v) / env;
      G(i, k) = ev.eval(omega(k), -v) / env;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(F, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double inv_cond = sv(sv.size() - 1) / sv(0);
  if (!(inv_cond > 1e-10)) {
    throw IllConditioned(fmt::format("sampling system singular (sigma_min/sigma_max = {})", inv_cond));
  }
  // F * M^T = G in the least-squares sense.
  Eigen::MatrixXcd Mt = svd.solve(G);
  MinusOneAction out;
  out.matrix = Mt.transpose();
  out.inverse_condition = inv_cond;
  out.residual = (out.matrix - expected_minus_one_permutation().cast<cplx>()).cwiseAbs().maxCoeff();
  out.determinant = out.matrix.determinant();
  auto kernel_dim = [&](double lambda) {
    Eigen::Matrix4cd A = out.matrix - lambda * Eigen::Matrix4cd::Identity();
    Eigen::JacobiSVD<Eigen::Matrix4cd> s2(A);
    const auto& sv2 = s2.singularValues();
    int dim = 0;
    for (int i = 0; i < 4; ++i) dim += sv2(i) < 1e-6 ? 1 : 0;
    return dim;
  };
  out.plus_dimension = kernel_dim(1.0);
  out.minus_dimension = kernel_dim(-1.0);
  return out;
}

// ---------------------------------------------------------------------------

cplx w2_constant(const PeriodMatrix& Z) { return -std::exp(-kI * kPi * Z.z22 / 4.0); }

QuasiPeriodicityReport quasi_periodicity_check(const PeriodMatrix& Z, const EvalSettings& s,
                                               int n_samples, std::uint64_t seed, double floor) {
  if (n_samples < 10) throw std::invalid_argument("quasi_periodicity_check needs n_samples >= 10");
  ThetaEvaluator ev(Z, s);
  Rng rng(seed);
  std::vector<SurfacePoint> base(n_samples), plus_w1(n_samples), plus_w2(n_samples),
      plus_w12(n_samples);
  const SurfacePoint w1 = klein_w1(), w2 = klein_w2(Z);
  for (int i = 0; i < n_samples; ++i) {
    base[i] = random_cell_point(rng, Z);
    plus_w1[i] = base[i] + w1;
    plus_w2[i] = base[i] + w2;
    plus_w12[i] = base[i] + w1 + w2;
  }
  auto f0 = parallel::theta_A_values(ev, base);
  auto f1 = parallel::theta_A_values(ev, plus_w1);
  auto f2 = parallel::theta_A_values(ev, plus_w2);
  auto f12 = parallel::theta_A_values(ev, plus_w12);

  QuasiPeriodicityReport rep;
  rep.samples = n_samples;
  std::vector<cplx> raw, normalized, normalized12;
  for (int i = 0; i < n_samples; ++i) {
    rep.w1_residual = std::max(rep.w1_residual, std::abs(f1[i] + f0[i]));
    if (std::abs(f0[i]) <= floor * ev.envelope(base[i])) continue;
    cplx phase = std::exp(kI * kPi * base[i].v2);
    raw.push_back(f2[i] / f0[i]);
    normalized.push_back(phase * f2[i] / f0[i]);
    normalized12.push_back(phase * f12[i] / f0[i]);
  }
  rep.admissible = static_cast<int>(raw.size());
  if (raw.empty()) throw DegenerateSample("every sampled |theta_A(v)| fell below the floor");
  rep.raw_ratio_spread = relative_spread(raw);
  rep.M_spread = relative_spread(normalized);
  rep.w12_spread = relative_spread(normalized12);
  cplx mean{};
  for (auto r : normalized) mean += r;
  rep.M = mean / static_cast<double>(normalized.size());

  // theta_A(v + Z m + D n) = exp(-pi i m^T Z m - 2 pi i m^T v) theta_A(v)
  std::vector<SurfacePoint> shifted;
  std::vector<cplx> factors;
  std::vector<int> owner;
  for (int i = 0; i < n_samples; ++i) {
    for (int code = 0; code < 81; ++code) {
      std::array<double, 2> m{double(code % 3 - 1), double((code / 3) % 3 - 1)};
      std::array<double, 2> n{double((code / 9) % 3 - 1), double((code / 27) % 3 - 1)};
      cplx mzm = Z.z11 * (m[0] * m[0]) + 2.0 * Z.z12 * (m[0] * m[1]) + Z.z22 * (m[1] * m[1]);
      cplx mv = m[0] * base[i].v1 + m[1] * base[i].v2;
      shifted.push_back(base[i] + lattice_vector(Z, m, n));
      factors.push_back(std::exp(-kI * kPi * mzm - 2.0 * kI * kPi * mv));
      owner.push_back(i);
    }
  }
  auto fs = parallel::theta_A_values(ev, shifted);
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    int i = owner[j];
    double scale = std::abs(factors[j]) * ev.envelope(base[i]);
    rep.automorphy_residual =
        std::max(rep.automorphy_residual, std::abs(fs[j] - factors[j] * f0[i]) / scale);
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool ProductCaseReport::passed() const {
  auto s = summarize(scan);
  bool comps = components.size() == 5 &&
               std::all_of(components.begin(), components.end(), [](const auto& c) { return c.passed; });
  bool trans = translates.size() == 4 && translates_distinct &&
               std::all_of(translates.begin(), translates.end(),
                           [](const auto& t) { return t.odd_vanishing == 12 && t.even_vanishing == 4; });
  return comps && negative_passed && s.odd_vanishing == 12 && s.even_vanishing == 4 && trans;
}

ProductCaseReport product_case_components(const PeriodMatrix& Z, const EvalSettings& s,
                                          int samples_per_component, std::uint64_t seed,
                                          double zero_tol, double control_ratio) {
  if (!Z.is_diagonal()) throw NotDiagonal("product case needs z12 == 0");
  return product_case_components(Z.z11, Z.z22, s, samples_per_component, seed, zero_tol,
                                 control_ratio);
}

ProductCaseReport product_case_components(cplx tau1, cplx tau2, const EvalSettings& s,
                                          int samples_per_component, std::uint64_t seed,
                                          double zero_tol, double control_ratio) {
  if (!(tau1.imag() > 0) || !(tau2.imag() > 0)) {
    throw NotSiegel("tau1 and tau2 must lie in the upper half-plane");
  }
  const PeriodMatrix Z = PeriodMatrix::diagonal(tau1, tau2);
  ThetaEvaluator ev(Z, s);
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);

  ProductCaseReport rep;
  rep.tau1 = tau1;
  rep.tau2 = tau2;

  // One fibre of the first projection and four of the second.
  const cplx v1_fixed = 0.5 + tau1 / 2.0;
  const std::array<cplx, 4> v2_fixed{0.0, 2.0, tau2 / 2.0, 2.0 + tau2 / 2.0};
  rep.components.push_back({"v1 = 1/2 + tau1/2", true, v1_fixed});
  for (int k = 0; k < 4; ++k) {
    static const char* names[] = {"v2 = 0", "v2 = 2", "v2 = tau2/2", "v2 = 2 + tau2/2"};
    rep.components.push_back({names[k], false, v2_fixed[k]});
  }
  for (auto& comp : rep.components) {
    std::vector<SurfacePoint> pts;
    for (int i = 0; i < samples_per_component; ++i) {
      double a = u(rng), b = u(rng);
      if (comp.fixes_v1) {
        pts.push_back({comp.value, 4.0 * a + tau2 * b});
      } else {
        pts.push_back({a + tau1 * b, comp.value});
      }
    }
    auto vals = parallel::theta_A_values(ev, pts);
    comp.samples = samples_per_component;
    for (auto f : vals) comp.max_abs_theta = std::max(comp.max_abs_theta, std::abs(f));
    comp.passed = comp.max_abs_theta < zero_tol;
  }

  // Negative controls: points at distance >= 0.2 from every component.
  // Distance from x to c modulo the periods (period_a real, period_b complex).
  auto near = [](cplx x, cplx c, double period_a, cplx period_b) {
    cplx d = x - c;
    double sb = d.imag() / period_b.imag();
    double sa = (d.real() - sb * period_b.real()) / period_a;
    double best = std::numeric_limits<double>::infinity();
    for (int j = -1; j <= 1; ++j) {
      for (int k = -1; k <= 1; ++k) {
        cplx r = d - (std::round(sb) + j) * period_b - (std::round(sa) + k) * period_a;
        best = std::min(best, std::abs(r));
      }
    }
    return best;
  };
  const int kControls = 20;
  std::vector<SurfacePoint> controls;
  while (static_cast<int>(controls.size()) < kControls) {
    SurfacePoint p{u(rng) + tau1 * u(rng), 4.0 * u(rng) + tau2 * u(rng)};
    bool ok = near(p.v1, v1_fixed, 1.0, tau1) >= 0.2;
    for (auto c : v2_fixed) ok = ok && near(p.v2, c, 4.0, tau2) >= 0.2;
    if (ok) controls.push_back(p);
  }
  auto cvals = parallel::theta_A_values(ev, controls);
  rep.negative_samples = kControls;
  rep.min_negative_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kControls; ++i) {
    rep.min_negative_ratio = std::min(rep.min_negative_ratio, std::abs(cvals[i]) / ev.envelope(controls[i]));
  }
  rep.negative_passed = rep.min_negative_ratio > control_ratio;

  rep.scan = classify_points(ev, torsion_points(Z, {}), ScanThresholds{});

  // Translates of the curve by E[2] x {0}: zero set of theta_A(v - e).
  const std::array<cplx, 4> e2{0.0, 0.5, tau1 / 2.0, 0.5 + tau1 / 2.0};
  for (cplx e : e2) {
    TranslateCheck t;
    t.shift = {e, 0.0};
    auto recs = classify_points(ev, torsion_points(Z, -t.shift), ScanThresholds{});
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (recs[i].classification == TorsionClass::OddVanishing) ++t.odd_vanishing;
      if (recs[i].classification == TorsionClass::EvenVanishing) {
        ++t.even_vanishing;
        t.node_indices.push_back(static_cast<int>(i));
      }
    }
    rep.translates.push_back(std::move(t));
  }
  rep.translates_distinct = true;
  for (std::size_t i = 0; i < rep.translates.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.translates.size(); ++j) {
      if (rep.translates[i].node_indices == rep.translates[j].node_indices) rep.translates_distinct = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

double TraceResult::min_grad_norm() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : points) m = std::min(m, p.grad_norm);
  return m;
}

namespace {

struct LineResult {
  std::vector<TracePoint> points;
  int seeds_tried = 0;
};

// Re v2 is taken modulo the period 4 of theta_A(v1, .) into [-2, 2).
cplx wrap_v2(cplx v2) {
  double r = v2.real() - 4.0 * std::floor((v2.real() + 2.0) / 4.0);
  return {r, v2.imag()};
}

bool newton_line(const ThetaEvaluator& ev, cplx v1, cplx seed, const NewtonSettings& ns,
                 TracePoint& out) {
  const double tol = ev.settings().tol;
  cplx x = seed;
  ThetaJet j = ev.theta_A_jet({v1, x});
  for (int it = 0; it <= ns.max_iterations; ++it) {
    if (j.grad[1] == cplx{0.0, 0.0}) return false;
    cplx step = j.value / j.grad[1];
    if (std::abs(j.value) < tol && std::abs(step) < ns.step_tol) {
      out = {{v1, x}, std::abs(j.value), norm2(j.grad)};
      return true;
    }
    if (it == ns.max_iterations) break;
    double lambda = 1.0;
    for (int k = 0; k < 30; ++k) {
      cplx trial = x - lambda * step;
      ThetaJet jt = ev.theta_A_jet({v1, trial});
      if (std::abs(jt.value) < std::abs(j.value) || k == 29) {
        x = trial;
        j = jt;
        break;
      }
      lambda *= ns.damping;
    }
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return false;
}

LineResult solve_line(const ThetaEvaluator& ev, cplx v1, const std::vector<cplx>& seeds,
                      const NewtonSettings& ns, double window) {
  LineResult res;
  for (cplx seed : seeds) {
    ++res.seeds_tried;
    TracePoint p;
    if (!newton_line(ev, v1, seed, ns, p)) continue;
    p.v.v2 = wrap_v2(p.v.v2);
    if (std::abs(p.v.v2.imag()) > window) continue;
    bool dup = false;
    for (const auto& q : res.points) {
      cplx d = wrap_v2(p.v.v2 - q.v.v2);
      if (std::abs(d) < 1e-8) dup = true;
    }
    if (!dup) res.points.push_back(p);
  }
  std::sort(res.points.begin(), res.points.end(), [](const TracePoint& a, const TracePoint& b) {
    if (a.v.v2.real() != b.v.v2.real()) return a.v.v2.real() < b.v.v2.real();
    return a.v.v2.imag() < b.v.v2.imag();
  });
  return res;
}

}  // namespace

TraceResult trace_curve(const PeriodMatrix& Z, const EvalSettings& s, int grid_size,
                        const NewtonSettings& newton) {
  if (grid_size < 2) throw std::invalid_argument("trace_curve needs grid_size >= 2");
  ThetaEvaluator ev(Z, s);
  const double window = Z.z22.imag() + std::abs(Z.z12.imag());

  // Odd 2-torsion points give both seed lines and seed values.
  auto scan = two_torsion_scan(Z, s);
  std::vector<cplx> torsion_v1, base_seeds;
  for (const auto& r : scan) {
    if (r.classification != TorsionClass::OddVanishing) continue;
    torsion_v1.push_back(r.point.v1);
    torsion_v1.push_back(-r.point.v1);
    base_seeds.push_back(r.point.v2);
    base_seeds.push_back(-r.point.v2);
  }
  for (double x : {-1.5, -0.5, 0.5, 1.5}) {
    for (double y : {-0.5, 0.0, 0.5}) base_seeds.push_back({x, y * Z.z22.imag()});
  }

  // Grid lines first (row-major in (a, b)), then the torsion lines.
  const int n = grid_size;
  std::vector<cplx> lines;
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      double a = -0.5 + double(ia) / (n - 1);
      double b = -0.5 + double(ib) / (n - 1);
      lines.push_back(a + b * Z.z11);
    }
  }
  lines.insert(lines.end(), torsion_v1.begin(), torsion_v1.end());
  const auto n_lines = static_cast<std::ptrdiff_t>(lines.size());

  std::vector<LineResult> first(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n_lines; ++i) {
    first[i] = solve_line(ev, lines[i], base_seeds, newton, window);
  }

  // Second pass on grid lines: continue from neighbouring lines' solutions.
  std::vector<LineResult> second(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n_lines; ++i) {
    if (i >= static_cast<std::ptrdiff_t>(n) * n) {
      second[i] = first[i];
      continue;
    }
    int ia = static_cast<int>(i) / n, ib = static_cast<int>(i) % n;
    std::vector<cplx> seeds = base_seeds;
    for (auto [da, db] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
      int ja = ia + da, jb = ib + db;
      if (ja < 0 || jb < 0 || ja >= n || jb >= n) continue;
      for (const auto& p : first[ja * n + jb].points) seeds.push_back(p.v.v2);
    }
    second[i] = solve_line(ev, lines[i], seeds, newton, window);
  }

  TraceResult out;
  out.lines = static_cast<int>(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (second[i].points.empty()) {
      out.failures.push_back({static_cast<int>(i), lines[i], second[i].seeds_tried});
    }
    out.points.insert(out.points.end(), second[i].points.begin(), second[i].points.end());
  }
  return out;
}

}  // namespace thetalab::theta
