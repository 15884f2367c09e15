#pragma once

#include <cstdint>

#include "parallax/geometry.hpp"
#include "parallax/norms.hpp"
#include "parallax/types.hpp"

namespace parallax {

// Effort knobs for the brute-force reference computations. All sampling is
// driven by a single seeded generator with fixed iteration order, so a fixed
// seed reproduces results bit for bit on the same platform.
struct OracleConfig {
  int lambda_grid = 4096;    // dense unit-circle grid for parallelism
  int sphere_samples = 20000;
  int refine_steps = 100;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Parallelism by exhaustive search: evaluate ||a + lambda b|| on a dense
// unit-circle grid, then ternary-refine around the best point. No structural
// shortcuts; this is the reference the fast deciders are checked against.
ParallelVerdict oracle_parallel(const ComplexMatrix& a, const ComplexMatrix& b,
                                const NormHandle& h, const OracleConfig& cfg = {});

// Lower bound on the numerical radius: sample unit vectors, keep the best
// few, and polish each with a compass search on the sphere. The returned
// value is always a certified lower bound (every iterate stays unit).
double oracle_numerical_radius(const ComplexMatrix& t,
                               const OracleConfig& cfg = {});

// Lower bound on the dual norm sup { |tr(a g*)| : ||g||_h <= 1 } by sampling
// the unit ball of h and polishing the best candidates. Accuracy is roughly
// 1e-3 at the default effort; useful as an independent cross-check, not as a
// high-precision evaluator.
double oracle_dual_norm(const ComplexMatrix& a, const NormHandle& h,
                        const OracleConfig& cfg = {});

}  // namespace parallax
