#pragma once

#include <array>

#include "thetalab/theta/types.hpp"

namespace thetalab::theta {

/// Value and holomorphic gradient (d/dv1, d/dv2) of a theta function.
struct ThetaJet {
  cplx value;
  std::array<cplx, 2> grad{};
};

/// Smallest R such that the Gaussian tail of a genus-2 theta series outside
/// the box |l|_inf <= R is below `tol`, for summands bounded by
/// (2 pi |n|)^degree * exp(-pi * lambda_min * |n + a|^2) with |c1 + a|_inf <= offset.
/// Throws RadiusExceeded when no R <= max_radius suffices.
int required_radius(double lambda_min, double offset, int degree, double tol, int max_radius);

/// Evaluates theta[c1;c2](v, Z) = sum_l exp(pi i (l+c1)^T Z (l+c1) + 2 pi i (l+c1)^T (v+c2))
/// for one fixed period matrix. Immutable after construction, so a single
/// instance may be shared across threads.
///
/// Every evaluation first moves Im v into the cell Y [-1/2, 1/2]^2 by a
/// lattice translation Z m, sums the box |l|_inf <= R there, and applies the
/// exact automorphy factor. The truncation error is then bounded by
/// tol * envelope(v), envelope(v) = exp(pi y^T Y^{-1} y), y = Im v.
class ThetaEvaluator {
 public:
  explicit ThetaEvaluator(const PeriodMatrix& Z, const EvalSettings& settings = {});

  const PeriodMatrix& period_matrix() const { return Z_; }
  const EvalSettings& settings() const { return settings_; }

  cplx eval(const ThetaCharacteristic& chi, const SurfacePoint& v) const;
  ThetaJet jet(const ThetaCharacteristic& chi, const SurfacePoint& v) const;

  /// theta_A = theta[3w;0] - theta[w;0], the odd section.
  cplx theta_A(const SurfacePoint& v) const;
  ThetaJet theta_A_jet(const SurfacePoint& v) const;

  /// exp(pi y^T Y^{-1} y): the Gaussian envelope that bounds |theta(v)| up to
  /// a Z-dependent constant. Used as the local scale for relative checks.
  double envelope(const SurfacePoint& v) const;

  int value_radius() const { return value_radius_; }
  int gradient_radius() const { return gradient_radius_; }

  /// Box sum with an explicit radius (no tail-bound selection). The
  /// reduction and automorphy factor are still applied.
  ThetaJet jet_with_radius(const ThetaCharacteristic& chi, const SurfacePoint& v, int radius,
                           bool with_gradient) const;

 private:
  PeriodMatrix Z_;
  EvalSettings settings_;
  Sym2 Yinv_;
  int value_radius_ = 0;
  int gradient_radius_ = 0;
};

cplx theta_char_eval(const ThetaCharacteristic& chi, const SurfacePoint& v, const PeriodMatrix& Z,
                     const EvalSettings& s = {});
cplx theta_A_eval(const SurfacePoint& v, const PeriodMatrix& Z, const EvalSettings& s = {});
std::array<cplx, 2> theta_A_gradient(const SurfacePoint& v, const PeriodMatrix& Z,
                                     const EvalSettings& s = {});

namespace detail {

struct Reduced {
  SurfacePoint v;         // v + Z m, with Y^{-1} Im(v + Z m) in [-1/2, 1/2]^2
  std::array<int, 2> m{};
};

Reduced reduce_imaginary(const SurfacePoint& v, const PeriodMatrix& Z, const Sym2& Yinv);

// Box sum over |l|_inf <= R with no reduction; c1 is used as given. The
// separable variant builds each summand from per-row and per-column factors
// and a geometric cross term; the direct variant takes one exp per summand
// and serves as the reference.
ThetaJet box_sum_separable(const std::array<double, 2>& c1, const SurfacePoint& w,
                           const PeriodMatrix& Z, int R, bool with_gradient);
ThetaJet box_sum_direct(const std::array<double, 2>& c1, const SurfacePoint& w,
                        const PeriodMatrix& Z, int R, bool with_gradient);

}  // namespace detail

}  // namespace thetalab::theta
