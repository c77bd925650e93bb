#pragma once

#include <span>
#include <vector>

#include "thetalab/theta/evaluator.hpp"

// Batch evaluation of theta_A over many points. `serial` is the reference
// path kept for testing; `parallel` splits the points across OpenMP threads.
// Each output slot depends only on its own input point, so both paths return
// bit-identical vectors.
namespace thetalab::theta {

namespace serial {
std::vector<cplx> theta_A_values(const ThetaEvaluator& ev, std::span<const SurfacePoint> points);
std::vector<ThetaJet> theta_A_jets(const ThetaEvaluator& ev, std::span<const SurfacePoint> points);
}  // namespace serial

namespace parallel {
std::vector<cplx> theta_A_values(const ThetaEvaluator& ev, std::span<const SurfacePoint> points);
std::vector<ThetaJet> theta_A_jets(const ThetaEvaluator& ev, std::span<const SurfacePoint> points);
}  // namespace parallel

// Direct one-exp-per-summand evaluation of theta[chi] at the evaluator's
// radius. Slow; used as an oracle for the separable kernel and in the bench.
namespace reference {
cplx theta_char(const ThetaEvaluator& ev, const ThetaCharacteristic& chi, const SurfacePoint& v);
std::vector<cplx> theta_A_values(const ThetaEvaluator& ev, std::span<const SurfacePoint> points);
}  // namespace reference

}  // namespace thetalab::theta
