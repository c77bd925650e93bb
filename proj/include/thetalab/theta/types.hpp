#pragma once

#include <array>
#include <complex>

#include <boost/rational.hpp>

#include "thetalab/error.hpp"

namespace thetalab::theta {

using cplx = std::complex<double>;
using Fraction = boost::rational<int>;

THETALAB_DEFINE_ERROR(NotSiegel);
THETALAB_DEFINE_ERROR(RadiusExceeded);
THETALAB_DEFINE_ERROR(IllConditioned);
THETALAB_DEFINE_ERROR(DegenerateSample);
THETALAB_DEFINE_ERROR(NotDiagonal);

/// Real symmetric 2x2 matrix, stored as its three independent entries.
struct Sym2 {
  double a11 = 0, a12 = 0, a22 = 0;

  double det() const { return a11 * a22 - a12 * a12; }
  double min_eigenvalue() const;
  double max_eigenvalue() const;
  Sym2 inverse() const;
  std::array<double, 2> apply(const std::array<double, 2>& x) const {
    return {a11 * x[0] + a12 * x[1], a12 * x[0] + a22 * x[1]};
  }
  double quad(const std::array<double, 2>& x) const {
    return a11 * x[0] * x[0] + 2 * a12 * x[0] * x[1] + a22 * x[1] * x[1];
  }
};

/// A point Z = X + iY of the genus-2 Siegel upper half-space. Symmetry is
/// structural: only z11, z12, z22 are stored.
struct PeriodMatrix {
  cplx z11, z12, z22;

  static PeriodMatrix diagonal(cplx tau1, cplx tau2) { return {tau1, 0.0, tau2}; }

  Sym2 real() const { return {z11.real(), z12.real(), z22.real()}; }
  Sym2 imag() const { return {z11.imag(), z12.imag(), z22.imag()}; }

  /// y11 > 0 and det Y > 0.
  bool is_siegel() const;
  /// Throws NotSiegel unless is_siegel().
  void require_siegel() const;
  bool is_diagonal() const { return z12 == cplx{0.0, 0.0}; }

  // Z * (a, b) for a real 2-vector.
  std::array<cplx, 2> times(double a, double b) const {
    return {z11 * a + z12 * b, z12 * a + z22 * b};
  }
};

/// A point of C^2; represents a point of A = C^2 / (Z Z^2 + D Z^2).
struct SurfacePoint {
  cplx v1, v2;

  SurfacePoint operator-() const { return {-v1, -v2}; }
  SurfacePoint operator+(const SurfacePoint& o) const { return {v1 + o.v1, v2 + o.v2}; }
  SurfacePoint operator-(const SurfacePoint& o) const { return {v1 - o.v1, v2 - o.v2}; }
  SurfacePoint operator*(double s) const { return {v1 * s, v2 * s}; }
  bool operator==(const SurfacePoint&) const = default;
};

/// Rational characteristic [c1; c2]. Denominators are capped so that every
/// value in play (0, w, 2w, 3w with w = (0, 1/4)) is representable exactly.
class ThetaCharacteristic {
 public:
  static constexpr int kDefaultMaxDenominator = 4;

  ThetaCharacteristic() = default;
  ThetaCharacteristic(std::array<Fraction, 2> c1, std::array<Fraction, 2> c2,
                      int max_denominator = kDefaultMaxDenominator);

  /// k * w, w = (0, 1/4), with c2 = 0.
  static ThetaCharacteristic omega_multiple(int k);
  static ThetaCharacteristic zero() { return {}; }

  const std::array<Fraction, 2>& c1() const { return c1_; }
  const std::array<Fraction, 2>& c2() const { return c2_; }
  std::array<double, 2> c1_values() const;
  std::array<double, 2> c2_values() const;

  bool operator==(const ThetaCharacteristic&) const = default;

 private:
  std::array<Fraction, 2> c1_{};
  std::array<Fraction, 2> c2_{};
};

struct EvalSettings {
  double tol = 1e-12;   // truncation tolerance on the envelope-normalized value
  int max_radius = 64;  // cap on the box |l|_inf <= R

  void validate() const;
};

/// The lattice Lambda = Z Z^2 + D Z^2 uses D = diag(1, 4).
inline constexpr std::array<int, 2> kPolarizationType{1, 4};

/// Z m + D n.
inline SurfacePoint lattice_vector(const PeriodMatrix& Z, const std::array<double, 2>& m,
                                   const std::array<double, 2>& n) {
  auto zm = Z.times(m[0], m[1]);
  return {zm[0] + kPolarizationType[0] * n[0], zm[1] + kPolarizationType[1] * n[1]};
}

}  // namespace thetalab::theta
