#include "thetalab/theta/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

namespace thetalab::theta {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// After reduction |a|_inf <= 1/2 and c1 is taken modulo 1, so |c1 + a|_inf < 3/2.
constexpr double kBoxOffset = 1.5;

std::array<double, 2> frac(const std::array<double, 2>& c) {
  return {c[0] - std::floor(c[0]), c[1] - std::floor(c[1])};
}

}  // namespace

int required_radius(double lambda_min, double offset, int degree, double tol, int max_radius) {
  if (!(lambda_min > 0)) throw NotSiegel("smallest eigenvalue of Im Z must be positive");
  // t_k bounds the summed magnitude of the 8k lattice points on the shell |l|_inf = k.
  auto shell = [&](int k) {
    double dist = std::max(0.0, k - offset);
    return 8.0 * k * std::pow(2 * kPi * (k + offset), degree) *
           std::exp(-kPi * lambda_min * dist * dist);
  };
  std::vector<double> terms{0.0};
  constexpr int kHardStop = 1 << 20;
  for (int k = 1; k < kHardStop; ++k) {
    double t = shell(k);
    terms.push_back(t);
    if (k > max_radius + 1 && k > offset + 1 && t < 1e-6 * tol) break;
  }
  // tail[R] = sum_{k > R} t_k
  std::vector<double> tail(terms.size() + 1, 0.0);
  for (int k = static_cast<int>(terms.size()) - 1; k >= 0; --k) tail[k] = tail[k + 1] + terms[k];
  for (int R = 1; R <= max_radius; ++R) {
    if (tail[R + 1] < tol) return R;
  }
  throw RadiusExceeded(fmt::format(
      "truncation radius above max_radius={} needed (lambda_min={}, tol={})", max_radius,
      lambda_min, tol));
}

namespace detail {

Reduced reduce_imaginary(const SurfacePoint& v, const PeriodMatrix& Z, const Sym2& Yinv) {
  auto a = Yinv.apply({v.v1.imag(), v.v2.imag()});
  Reduced r;
  r.m = {-static_cast<int>(std::round(a[0])), -static_cast<int>(std::round(a[1]))};
  auto shift = Z.times(r.m[0], r.m[1]);
  r.v = {v.v1 + shift[0], v.v2 + shift[1]};
  return r;
}

ThetaJet box_sum_separable(const std::array<double, 2>& c1, const SurfacePoint& w,
                           const PeriodMatrix& Z, int R, bool with_gradient) {
  const int width = 2 * R + 1;
  // Column factors exp(pi i z22 n2^2 + 2 pi i n2 w2), independent of the row.
  std::vector<cplx> col(width);
  std::vector<double> n2s(width);
  for (int j = 0; j < width; ++j) {
    double n2 = (j - R) + c1[1];
    n2s[j] = n2;
    col[j] = std::exp(kI * kPi * (Z.z22 * (n2 * n2) + 2.0 * n2 * w.v2));
  }
  cplx val{}, g1{}, g2{};
  for (int l1 = -R; l1 <= R; ++l1) {
    double n1 = l1 + c1[0];
    cplx row = std::exp(kI * kPi * (Z.z11 * (n1 * n1) + 2.0 * n1 * w.v1));
    cplx step = std::exp(2.0 * kI * kPi * Z.z12 * n1);
    cplx cross = std::exp(2.0 * kI * kPi * Z.z12 * (n1 * n2s[0]));
    cplx row_sum{}, row_n2{};
    for (int j = 0; j < width; ++j) {
      cplx t = col[j] * cross;
      row_sum += t;
      if (with_gradient) row_n2 += n2s[j] * t;
      cross *= step;
    }
    val += row * row_sum;
    if (with_gradient) {
      g1 += n1 * (row * row_sum);
      g2 += row * row_n2;
    }
  }
  ThetaJet jet{val, {}};
  if (with_gradient) jet.grad = {2.0 * kI * kPi * g1, 2.0 * kI * kPi * g2};
  return jet;
}

ThetaJet box_sum_direct(const std::array<double, 2>& c1, const SurfacePoint& w,
                        const PeriodMatrix& Z, int R, bool with_gradient) {
  cplx val{}, g1{}, g2{};
  for (int l1 = -R; l1 <= R; ++l1) {
    for (int l2 = -R; l2 <= R; ++l2) {
      double n1 = l1 + c1[0];
      double n2 = l2 + c1[1];
      cplx quad = Z.z11 * (n1 * n1) + 2.0 * Z.z12 * (n1 * n2) + Z.z22 * (n2 * n2);
      cplx lin = n1 * w.v1 + n2 * w.v2;
      cplx t = std::exp(kI * kPi * quad + 2.0 * kI * kPi * lin);
      val += t;
      if (with_gradient) {
        g1 += n1 * t;
        g2 += n2 * t;
      }
    }
  }
  ThetaJet jet{val, {}};
  if (with_gradient) jet.grad = {2.0 * kI * kPi * g1, 2.0 * kI * kPi * g2};
  return jet;
}

}  // namespace detail

ThetaEvaluator::ThetaEvaluator(const PeriodMatrix& Z, const EvalSettings& settings)
    : Z_(Z), settings_(settings) {
  settings_.validate();
  Z_.require_siegel();
  Sym2 Y = Z_.imag();
  Yinv_ = Y.inverse();
  double lambda = Y.min_eigenvalue();
  value_radius_ = required_radius(lambda, kBoxOffset, 0, settings_.tol, settings_.max_radius);
  gradient_radius_ = required_radius(lambda, kBoxOffset, 1, settings_.tol, settings_.max_radius);
}

double ThetaEvaluator::envelope(const SurfacePoint& v) const {
  return std::exp(kPi * Yinv_.quad({v.v1.imag(), v.v2.imag()}));
}

ThetaJet ThetaEvaluator::jet_with_radius(const ThetaCharacteristic& chi, const SurfacePoint& v,
                                         int radius, bool with_gradient) const {
  auto c1 = frac(chi.c1_values());
  auto c2 = chi.c2_values();
  auto red = detail::reduce_imaginary(v, Z_, Yinv_);
  SurfacePoint w{red.v.v1 + c2[0], red.v.v2 + c2[1]};
  ThetaJet inner = detail::box_sum_separable(c1, w, Z_, radius, with_gradient);
  if (red.m[0] == 0 && red.m[1] == 0) return inner;

  // theta(v) = exp(-pi i m^T Z m + 2 pi i m^T (v_red + c2)) theta(v_red)
  double m1 = red.m[0], m2 = red.m[1];
  cplx mzm = Z_.z11 * (m1 * m1) + 2.0 * Z_.z12 * (m1 * m2) + Z_.z22 * (m2 * m2);
  cplx factor = std::exp(-kI * kPi * mzm + 2.0 * kI * kPi * (m1 * w.v1 + m2 * w.v2));
  ThetaJet out{factor * inner.value, {}};
  if (with_gradient) {
    out.grad = {factor * (2.0 * kI * kPi * m1 * inner.value + inner.grad[0]),
                factor * (2.0 * kI * kPi * m2 * inner.value + inner.grad[1])};
  }
  return out;
}

cplx ThetaEvaluator::eval(const ThetaCharacteristic& chi, const SurfacePoint& v) const {
  return jet_with_radius(chi, v, value_radius_, false).value;
}

ThetaJet ThetaEvaluator::jet(const ThetaCharacteristic& chi, const SurfacePoint& v) const {
  return jet_with_radius(chi, v, gradient_radius_, true);
}

cplx ThetaEvaluator::theta_A(const SurfacePoint& v) const {
  static const auto w1 = ThetaCharacteristic::omega_multiple(1);
  static const auto w3 = ThetaCharacteristic::omega_multiple(3);
  return eval(w3, v) - eval(w1, v);
}

ThetaJet ThetaEvaluator::theta_A_jet(const SurfacePoint& v) const {
  static const auto w1 = ThetaCharacteristic::omega_multiple(1);
  static const auto w3 = ThetaCharacteristic::omega_multiple(3);
  ThetaJet a = jet(w3, v);
  ThetaJet b = jet(w1, v);
  return {a.value - b.value, {a.grad[0] - b.grad[0], a.grad[1] - b.grad[1]}};
}

cplx theta_char_eval(const ThetaCharacteristic& chi, const SurfacePoint& v, const PeriodMatrix& Z,
                     const EvalSettings& s) {
  return ThetaEvaluator(Z, s).eval(chi, v);
}

cplx theta_A_eval(const SurfacePoint& v, const PeriodMatrix& Z, const EvalSettings& s) {
  return ThetaEvaluator(Z, s).theta_A(v);
}

std::array<cplx, 2> theta_A_gradient(const SurfacePoint& v, const PeriodMatrix& Z,
                                     const EvalSettings& s) {
  return ThetaEvaluator(Z, s).theta_A_jet(v).grad;
}

}  // namespace thetalab::theta
