#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thetalab/theta/evaluator.hpp"

namespace thetalab::theta {

// ---------------------------------------------------------------------------
// Lattice helpers

/// Representative (Z alpha + D beta) / 2 of a 2-torsion point.
SurfacePoint two_torsion_point(const PeriodMatrix& Z, std::array<int, 2> alpha,
                               std::array<int, 2> beta);

/// w1 = (0, 2) and w2 = (z12/2, z22/2): lifts of the generators of K(L) cap A[2].
SurfacePoint klein_w1();
SurfacePoint klein_w2(const PeriodMatrix& Z);

/// Euclidean length of the shortest representative of p - q modulo
/// Lambda = Z Z^2 + D Z^2 (nearest-integer rounding in lattice coordinates).
double distance_mod_lattice(const SurfacePoint& p, const SurfacePoint& q, const PeriodMatrix& Z);

// ---------------------------------------------------------------------------
// 2-torsion scan

enum class TorsionClass { OddVanishing, EvenVanishing, NonVanishing };

const char* to_string(TorsionClass c);

struct TorsionRecord {
  std::array<int, 2> alpha{};
  std::array<int, 2> beta{};
  SurfacePoint point;
  double abs_theta = 0;
  double grad_norm = 0;
  TorsionClass classification = TorsionClass::NonVanishing;
};

struct ScanThresholds {
  double value_ratio = 1e-6;     // vanishing: |theta_A| < value_ratio * scale
  double gradient_ratio = 1e-6;  // odd: |grad| >= gradient_ratio * max |grad|
};

/// Evaluates theta_A at the 16 points (Z alpha + D beta)/2 + offset and
/// classifies each. The value scale is the largest |theta[w]| + |theta[3w]|
/// over the 16 points, so the test stays meaningful even when every point
/// vanishes (product surfaces).
std::vector<TorsionRecord> two_torsion_scan(const PeriodMatrix& Z, const EvalSettings& s,
                                            const SurfacePoint& offset = {},
                                            const ScanThresholds& thresholds = {});

struct ScanSummary {
  int odd_vanishing = 0;
  int even_vanishing = 0;
  int non_vanishing = 0;
  double max_vanishing = 0;      // largest |theta_A| among vanishing points
  double min_non_vanishing = 0;  // smallest |theta_A| among the others (0 if none)
  /// min_non_vanishing / max_vanishing; +inf when the vanishing values are exactly 0.
  double separation_ratio() const;
};

ScanSummary summarize(const std::vector<TorsionRecord>& records);

// ---------------------------------------------------------------------------
// Parity

struct ParityReport {
  int samples = 0;
  double odd_residual = 0;    // max |theta_A(v) + theta_A(-v)| / envelope(v)
  double basis_residual = 0;  // max |theta[w](-v) - theta[3w](v)| / envelope(v)
};

/// Samples n cell points (seeded) and measures the two parity relations.
ParityReport parity_check(const PeriodMatrix& Z, const EvalSettings& s, int n_samples,
                          std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// (-1)-action on the basis theta[0], theta[w], theta[2w], theta[3w]

struct MinusOneAction {
  Eigen::Matrix4cd matrix;   // f(-v) = matrix * f(v)
  double residual = 0;       // max entry of |matrix - P|, P = (0)(2)(1 3)
  int plus_dimension = 0;    // dim ker(matrix - 1)
  int minus_dimension = 0;   // dim ker(matrix + 1)
  cplx determinant;
  double inverse_condition = 0;  // sigma_min / sigma_max of the sampling system
};

Eigen::Matrix4d expected_minus_one_permutation();

/// Recovers the matrix of v -> -v by sampling the basis at n_points pairs +-v.
/// Throws IllConditioned when the sampling system is numerically singular.
MinusOneAction minus_one_action(const PeriodMatrix& Z, const EvalSettings& s, int n_points = 16,
                                std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Translations by the Klein subgroup and lattice automorphy

struct QuasiPeriodicityReport {
  int samples = 0;
  int admissible = 0;
  double w1_residual = 0;         // max |theta_A(v + w1) + theta_A(v)|
  double raw_ratio_spread = 0;    // relative spread of theta_A(v + w2) / theta_A(v)
  cplx M;                         // mean of exp(pi i v2) theta_A(v + w2) / theta_A(v)
  double M_spread = 0;            // relative spread of that normalized ratio
  double w12_spread = 0;          // same, for the translation w1 + w2
  double automorphy_residual = 0; // max relative |theta_A(v+Zm+Dn) - e_m(v) theta_A(v)|
};

/// theta_A(v + w2) = M(Z) exp(-pi i v2) theta_A(v) with M(Z) = -exp(-pi i z22 / 4),
/// obtained by re-indexing the series. Exposed so tests can compare the
/// sampled constant against it.
cplx w2_constant(const PeriodMatrix& Z);

/// Samples n_samples cell points (seeded) and measures the translation
/// relations. Points with |theta_A(v)| below floor * envelope(v) are skipped
/// for the ratio statistics; DegenerateSample if none survive.
QuasiPeriodicityReport quasi_periodicity_check(const PeriodMatrix& Z, const EvalSettings& s,
                                               int n_samples, std::uint64_t seed = 0,
                                               double floor = 1e-3);

// ---------------------------------------------------------------------------
// Product surfaces Z = diag(tau1, tau2)

struct ComponentCheck {
  std::string label;
  bool fixes_v1 = false;  // {v1 = value} versus {v2 = value}
  cplx value;
  int samples = 0;
  double max_abs_theta = 0;
  bool passed = false;
};

struct TranslateCheck {
  SurfacePoint shift;
  int odd_vanishing = 0;
  int even_vanishing = 0;
  std::vector<int> node_indices;  // scan indices of the EvenVanishing points
};

struct ProductCaseReport {
  cplx tau1, tau2;
  std::vector<ComponentCheck> components;
  int negative_samples = 0;
  double min_negative_ratio = 0;  // min |theta_A| / envelope over the controls
  bool negative_passed = false;
  std::vector<TorsionRecord> scan;
  std::vector<TranslateCheck> translates;  // translates by E[2] x {0}
  bool translates_distinct = false;
  bool passed() const;
};

ProductCaseReport product_case_components(cplx tau1, cplx tau2, const EvalSettings& s,
                                          int samples_per_component = 50, std::uint64_t seed = 0,
                                          double zero_tol = 1e-10, double control_ratio = 1e-3);
/// Same, from a period matrix; throws NotDiagonal unless z12 == 0.
ProductCaseReport product_case_components(const PeriodMatrix& Z, const EvalSettings& s,
                                          int samples_per_component = 50, std::uint64_t seed = 0,
                                          double zero_tol = 1e-10, double control_ratio = 1e-3);

// ---------------------------------------------------------------------------
// Curve tracing

struct NewtonSettings {
  double damping = 0.5;  // step factor on residual increase
  int max_iterations = 50;
  double step_tol = 1e-12;
};

struct TracePoint {
  SurfacePoint v;
  double abs_theta = 0;
  double grad_norm = 0;
};

struct TraceFailure {
  int line = 0;
  cplx v1;
  int seeds_tried = 0;
};

struct TraceResult {
  int lines = 0;
  std::vector<TracePoint> points;      // ordered by line, then by v2
  std::vector<TraceFailure> failures;  // lines where no seed converged
  double min_grad_norm() const;
};

/// Solves theta_A(v1, .) = 0 by damped Newton on each line v1 of a symmetric
/// grid_size x grid_size grid over {a + b z11 : a, b in [-1/2, 1/2]}, plus the
/// lines through the 12 odd 2-torsion points and their negatives. Seeds are the
/// torsion v2-coordinates (and negatives), a fixed symmetric mesh, and, in a
/// second pass, the first-pass solutions of neighbouring grid lines.
TraceResult trace_curve(const PeriodMatrix& Z, const EvalSettings& s, int grid_size,
                        const NewtonSettings& newton = {});

}  // namespace thetalab::theta
