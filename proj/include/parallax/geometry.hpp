#pragma once

#include <functional>

#include "parallax/norms.hpp"
#include "parallax/types.hpp"

namespace parallax {

// Outcome of a parallelism decision. `achieved` is the best value of
// ||a + lambda b|| found on the unit circle, `bound` the triangle-inequality
// ceiling ||a|| + ||b||, and `gap` their (clamped) difference; `parallel` is
// gap <= abs_tol + rel_tol * bound unless a decider documents otherwise.
struct ParallelVerdict {
  bool parallel = false;
  Complex lambda_star{1.0, 0.0};  // unimodular maximizer
  double achieved = 0.0;
  double bound = 0.0;
  double gap = 0.0;
};

struct BjoVerdict {
  bool orthogonal = false;
  Complex alpha_star{0.0, 0.0};  // minimizer of ||x + alpha y||
  double min_value = 0.0;
};

// Maximize a scalar function over the unit circle: uniform grid followed by
// golden-section refinement around the best bracket. Shared by every
// lambda/theta search in the library.
struct CircleMax {
  double theta = 0.0;
  double value = 0.0;
};

CircleMax max_on_circle(const std::function<double(double)>& g,
                        int grid_points, int refine_iters);

// Assemble a verdict from an achieved value; fills gap and the boolean from
// the tolerance rule above.
ParallelVerdict make_parallel_verdict(double achieved, double bound,
                                      Complex lambda, const Tolerance& tol);

// Norm-parallelism a || b: does some unimodular lambda make
// ||a + lambda b|| = ||a|| + ||b||? Shapes must match; induced norms
// additionally require square inputs.
ParallelVerdict is_parallel(const ComplexMatrix& a, const ComplexMatrix& b,
                            const NormHandle& h, const Tolerance& tol = {});

// Birkhoff-James orthogonality x B-perp y: ||x|| <= ||x + alpha y|| for every
// complex alpha. The minimum lies in the disk |alpha| <= 2||x|| / ||y||, and
// f(alpha) = ||x + alpha y|| is convex, so a coarse polar grid plus compass
// descent locates it.
BjoVerdict is_bj_orthogonal(const ComplexMatrix& x, const ComplexMatrix& y,
                            const NormHandle& h, const Tolerance& tol = {});

// Parallelism of vectors under a vector norm.
ParallelVerdict vector_parallel(const ComplexVector& u, const ComplexVector& v,
                                VectorNormTag vt, const Tolerance& tol = {});

}  // namespace parallax
