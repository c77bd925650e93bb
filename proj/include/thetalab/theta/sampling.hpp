#pragma once

#include <random>

#include "thetalab/theta/types.hpp"

namespace thetalab::theta {

using Rng = std::mt19937_64;

/// Generic period matrix: X symmetric with entries in [-1/2, 1/2] and
/// Y = I + W W^T with W entries in [-1/2, 1/2]. With `non_product` set, draws
/// with |z12| < 1e-3 are rejected.
PeriodMatrix random_period_matrix(Rng& rng, bool non_product = true);

/// Upper half-plane point with real part in [-1/2, 1/2] and imaginary part in [0.8, 1.6].
cplx random_tau(Rng& rng);

/// A point Z a + D b with a, b uniform in [-1/2, 1/2]^2: one fundamental cell
/// of A centered at the origin.
SurfacePoint random_cell_point(Rng& rng, const PeriodMatrix& Z);

}  // namespace thetalab::theta
