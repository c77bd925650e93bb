#include "thetalab/theta/types.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace thetalab::theta {

double Sym2::min_eigenvalue() const {
  double mean = 0.5 * (a11 + a22);
  double half_gap = std::hypot(0.5 * (a11 - a22), a12);
  return mean - half_gap;
}

double Sym2::max_eigenvalue() const {
  double mean = 0.5 * (a11 + a22);
  double half_gap = std::hypot(0.5 * (a11 - a22), a12);
  return mean + half_gap;
}

Sym2 Sym2::inverse() const {
  double d = det();
  return {a22 / d, -a12 / d, a11 / d};
}

bool PeriodMatrix::is_siegel() const {
  Sym2 Y = imag();
  auto finite = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return finite(z11) && finite(z12) && finite(z22) && Y.a11 > 0 && Y.det() > 0;
}

void PeriodMatrix::require_siegel() const {
  if (!is_siegel()) {
    Sym2 Y = imag();
    throw NotSiegel(fmt::format("Im Z is not positive definite (y11={}, det Y={})", Y.a11, Y.det()));
  }
}

ThetaCharacteristic::ThetaCharacteristic(std::array<Fraction, 2> c1, std::array<Fraction, 2> c2,
                                         int max_denominator)
    : c1_(c1), c2_(c2) {
  for (const auto& q : {c1[0], c1[1], c2[0], c2[1]}) {
    if (q.denominator() > max_denominator) {
      throw std::invalid_argument(fmt::format("characteristic denominator {} exceeds limit {}",
                                              q.denominator(), max_denominator));
    }
  }
}

ThetaCharacteristic ThetaCharacteristic::omega_multiple(int k) {
  return {{Fraction(0), Fraction(k, 4)}, {Fraction(0), Fraction(0)}};
}

std::array<double, 2> ThetaCharacteristic::c1_values() const {
  return {boost::rational_cast<double>(c1_[0]), boost::rational_cast<double>(c1_[1])};
}

std::array<double, 2> ThetaCharacteristic::c2_values() const {
  return {boost::rational_cast<double>(c2_[0]), boost::rational_cast<double>(c2_[1])};
}

void EvalSettings::validate() const {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (max_radius < 1) throw std::invalid_argument("max_radius must be at least 1");
}

}  // namespace thetalab::theta
