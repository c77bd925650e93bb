#include "thetalab/theta/kernels.hpp"

#include <cmath>
#include <cstddef>

namespace thetalab::theta {

namespace serial {

std::vector<cplx> theta_A_values(const ThetaEvaluator& ev, std::span<const SurfacePoint> points) {
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = ev.theta_A(points[i]);
  return out;
}

std::vector<ThetaJet> theta_A_jets(const ThetaEvaluator& ev, std::span<const SurfacePoint> points) {
  std::vector<ThetaJet> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = ev.theta_A_jet(points[i]);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<cplx> theta_A_values(const ThetaEvaluator& ev, std::span<const SurfacePoint> points) {
  std::vector<cplx> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = ev.theta_A(points[i]);
  return out;
}

std::vector<ThetaJet> theta_A_jets(const ThetaEvaluator& ev, std::span<const SurfacePoint> points) {
  std::vector<ThetaJet> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = ev.theta_A_jet(points[i]);
  return out;
}

}  // namespace parallel

namespace reference {

cplx theta_char(const ThetaEvaluator& ev, const ThetaCharacteristic& chi, const SurfacePoint& v) {
  // No reduction here: sum directly at v with a box wide enough to cover the
  // shifted peak of the Gaussian.
  const auto& Z = ev.period_matrix();
  auto Yinv = Z.imag().inverse();
  auto a = Yinv.apply({v.v1.imag(), v.v2.imag()});
  int shift = static_cast<int>(std::ceil(std::max(std::abs(a[0]), std::abs(a[1]))));
  auto c1 = chi.c1_values();
  auto c2 = chi.c2_values();
  SurfacePoint w{v.v1 + c2[0], v.v2 + c2[1]};
  return detail::box_sum_direct(c1, w, Z, ev.value_radius() + shift + 1, false).value;
}

std::vector<cplx> theta_A_values(const ThetaEvaluator& ev, std::span<const SurfacePoint> points) {
  static const auto w1 = ThetaCharacteristic::omega_multiple(1);
  static const auto w3 = ThetaCharacteristic::omega_multiple(3);
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = theta_char(ev, w3, points[i]) - theta_char(ev, w1, points[i]);
  }
  return out;
}

}  // namespace reference

}  // namespace thetalab::theta
