#include "thetalab/theta/sampling.hpp"

#include <complex>

namespace thetalab::theta {

PeriodMatrix random_period_matrix(Rng& rng, bool non_product) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (;;) {
    double x11 = u(rng), x12 = u(rng), x22 = u(rng);
    double w11 = u(rng), w12 = u(rng), w21 = u(rng), w22 = u(rng);
    // Y = I + W W^T
    double y11 = 1 + w11 * w11 + w12 * w12;
    double y12 = w11 * w21 + w12 * w22;
    double y22 = 1 + w21 * w21 + w22 * w22;
    PeriodMatrix Z{{x11, y11}, {x12, y12}, {x22, y22}};
    if (non_product && std::abs(Z.z12) < 1e-3) continue;
    return Z;
  }
}

cplx random_tau(Rng& rng) {
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> im(0.8, 1.6);
  double x = re(rng);
  return {x, im(rng)};
}

SurfacePoint random_cell_point(Rng& rng, const PeriodMatrix& Z) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  double a1 = u(rng), a2 = u(rng), b1 = u(rng), b2 = u(rng);
  return lattice_vector(Z, {a1, a2}, {b1, b2});
}

}  // namespace thetalab::theta
