#pragma once

#include <cstdint>
#include <vector>

#include "parallax/geometry.hpp"
#include "parallax/types.hpp"

namespace parallax {

// Element of the Hilbert module M_{d x n} over the compacts: the inner
// product <x, y> = x y* takes values in M_d, and the module norm is the
// largest singular value of the matrix (= sqrt of ||<x, x>||_op).
struct ModuleElement {
  ComplexMatrix mat;

  Eigen::Index dim() const { return mat.rows(); }
  Eigen::Index multiplicity() const { return mat.cols(); }
};

double module_norm(const ModuleElement& x);
ComplexMatrix mod_inner(const ModuleElement& x, const ModuleElement& y);

// Rank-one orthogonal projection xi xi* onto a unit vector; the minimal
// projections of the compacts are exactly these.
ComplexMatrix minimal_projection(const ComplexVector& xi);

// Orthonormal system x_j = xi e_j^T, j = 1..n: <x_i, x_j> = delta_ij xi xi*.
struct OrthonormalBasis {
  ComplexVector xi;
  std::vector<ModuleElement> elements;
};

OrthonormalBasis make_orthonormal_basis(const ComplexVector& xi, int n);

// Parallelism in the module norm (lambda search over the unit circle).
ParallelVerdict module_parallel(const ModuleElement& x, const ModuleElement& y,
                                const Tolerance& tol = {});

// Each check evaluates both sides of a characterization independently:
// lhs_parallel by direct lambda maximization of ||x + lambda y||, rhs_holds
// by the algebraic condition under test. Agreement is the caller's assertion.
struct CheckPair {
  bool lhs_parallel = false;
  bool rhs_holds = false;
};

// x || y  iff  w(<x,x><x,y>) = ||x||^3 ||y||   (numerical radius w).
CheckPair thm_a_check(const ModuleElement& x, const ModuleElement& y,
                      const Tolerance& tol = {});

// When <x,x> is a minimal projection: x || y  iff  w(<x,y>) = ||y||.
// Throws NotMinimal when the precondition fails.
CheckPair thm_l_check(const ModuleElement& x, const ModuleElement& y,
                      const Tolerance& tol = {});

// When <x,x> is idempotent: x || y iff some common unimodular lambda makes
//   x  B-perp  ||y|| <x,x> x + lambda ||x|| <y,x> x   and
//   y  B-perp  ||x|| <y,y> y + lambda ||y|| <y,x> y.
// The lambda existence is searched on the unit-circle grid with refinement,
// each candidate tested with the Birkhoff-James decider in the module norm.
// Throws NotIdempotent when <x,x><x,x> != <x,x>.
CheckPair corollary_idempotent_check(const ModuleElement& x,
                                     const ModuleElement& y,
                                     const Tolerance& tol = {});

// No nonzero x is parallel to every element of an orthonormal basis when
// n >= 2. Randomized refutation search over unit-norm candidates: reports
//   max over trials of min over basis elements of (achieved - (||x|| + 1)),
// which stays strictly negative when the statement holds. Trials are seeded;
// the best candidate is polished by a local random-direction ascent.
double thm_b_search(const OrthonormalBasis& basis, int trials,
                    const Tolerance& tol = {},
                    std::uint64_t seed = 0x5eedu);

// Transitivity in the one-dimensional module (n = 1, elements are column
// vectors): x || y and y || z imply x || z for unit y. Returns the premises
// and the conclusion; the caller asserts the implication.
struct TransitivityResult {
  bool premises = false;
  bool conclusion = false;
};

TransitivityResult transitivity_check(const ModuleElement& x,
                                      const ModuleElement& y,
                                      const ModuleElement& z,
                                      const Tolerance& tol = {});

}  // namespace parallax
