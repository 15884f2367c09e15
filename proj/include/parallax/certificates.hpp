#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parallax/geometry.hpp"
#include "parallax/norms.hpp"
#include "parallax/types.hpp"

namespace parallax {

// Witness pair for operator-norm parallelism: unit vectors with
// x* a y = ||a||_op (real positive) and |x* b y| = ||b||_op, together with
// the unimodular lambda for which ||a + lambda b|| meets the triangle bound
// (lambda * x_by is real positive).
struct OpNormCertificate {
  ComplexVector x;
  ComplexVector y;
  Complex lambda{1.0, 0.0};
  Complex x_ay{0.0, 0.0};
  Complex x_by{0.0, 0.0};
};

// Operator-norm parallelism via the compressed numerical range. With
// (u1, v1) spanning the top singular pair subspaces of a, the pair is
// parallel iff the numerical radius of m = u1* b v1 equals ||b||_op. The
// radius attainment recovers the witness vectors, so deciding and
// certifying are one computation. The verdict's achieved/gap fields are
// evaluated at the recovered lambda; its boolean is the radius criterion.
std::pair<ParallelVerdict, std::optional<OpNormCertificate>>
opnorm_parallel_decide(const ComplexMatrix& a, const ComplexMatrix& b,
                       const Tolerance& tol = {});

// The equivalent membership form: -||b||_op lies in the numerical range of
// lambda * u1* b v1. For a parallel pair this holds at lambda = -conj of the
// certificate lambda; for a non-parallel pair it holds for no lambda.
bool opnorm_range_condition(const ComplexMatrix& a, const ComplexMatrix& b,
                            Complex lambda, const Tolerance& tol = {});

// Trace identity characterizing Schatten-p parallelism (1 < p < inf,
// nonsingular a). Writing a = d c with d = (a a*)^{1/2} positive and c a
// co-isometry, a || b iff |tr(d^{p-1} c b*)| = ||b||_p ||d||_p^p / ||a||_p.
struct SchattenCondition {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

SchattenCondition schatten_condition(const ComplexMatrix& a,
                                     const ComplexMatrix& b, double p,
                                     const Tolerance& tol = {});

// Dual-norm certificate for Ky-Fan(k) parallelism. f = u_k v_k* from the SVD
// of a + lambda* b is feasible for the dual ball (||f||_op <= 1,
// ||f||_tr <= k) and must pair to the norm values: tr(f* a) = ||a||_(k) real
// positive and |tr(f* b)| = ||b||_(k). `tie_warning` flags sigma_k ~
// sigma_{k+1} of a + lambda* b, where the subspace (hence f) is not well
// determined; such certificates are reported, not resolved.
struct DualCertificate {
  ComplexMatrix f;
  int k = 1;
  Complex trace_a{0.0, 0.0};
  Complex trace_b{0.0, 0.0};
  double f_opnorm = 0.0;
  double f_tracenorm = 0.0;
  double a_norm = 0.0;  // ||a||_(k)
  double b_norm = 0.0;  // ||b||_(k)
  bool checks_pass = false;
  bool tie_warning = false;
  double sigma_gap = 0.0;
};

// Returns nothing when the pair is not Ky-Fan(k) parallel; otherwise the
// certificate with its self-verification flags filled in.
std::optional<DualCertificate> kyfan_certificate(const ComplexMatrix& a,
                                                 const ComplexMatrix& b, int k,
                                                 const Tolerance& tol = {});

// Trace-norm case: k = n, so the trace-norm feasibility bound is automatic
// and the tie warning fires when a + lambda* b is (numerically) singular.
std::optional<DualCertificate> trace_certificate(const ComplexMatrix& a,
                                                 const ComplexMatrix& b,
                                                 const Tolerance& tol = {});

// Extreme-point decomposition for real matrices under induced l1/linf norms.
// The extreme points of the relevant balls are finite (signed basis vectors
// and sign vectors), so the norming set
//   V(a) = { (x, y) extreme : x^T a y = ||a|| }
// is enumerable for n <= 12. A decomposition is a convex combination of
// pairs from V(a) with |sum_j t_j x_j^T b y_j| = ||b||; since each term is a
// real in [-||b||, ||b||], a combination attains the bound only if a single
// pair does, so k = 1 witnesses are complete (k <= 2 trivially holds).
struct ExtremePointDecomposition {
  std::vector<RealVector> xs;
  std::vector<RealVector> ys;
  std::vector<double> weights;
  double value = 0.0;  // |sum_j t_j x_j^T b y_j|
};

std::optional<ExtremePointDecomposition> extreme_point_check(
    const ComplexMatrix& a, const ComplexMatrix& b, VectorNormTag vt,
    const Tolerance& tol = {});

// One-way vector-level sufficiency: if some y with nu(y) = 1 norms both a
// and b (nu(a y) = ||a||, nu(b y) = ||b||) and a y || b y as vectors, then
// a || b. The search covers the extreme maximizer candidates (basis vectors
// for l1, per-row phase vectors and sign vectors for linf, the top right
// singular subspace for l2). `matrix_confirmed` records the implied
// matrix-level verdict when a witness is found. The converse direction can
// fail: maximizer sets with a continuum of directions are only sampled.
struct VectorLevelResult {
  bool found = false;
  ComplexVector y;
  bool matrix_confirmed = false;
};

VectorLevelResult vector_level_sufficiency(const ComplexMatrix& a,
                                           const ComplexMatrix& b,
                                           VectorNormTag vt,
                                           const Tolerance& tol = {});

}  // namespace parallax
