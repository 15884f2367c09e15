#pragma once

#include <random>
#include <utility>

#include "parallax/types.hpp"

namespace parallax {

// Thin SVD a = u * diag(singular_values) * v.adjoint(), singular values in
// descending order. Columns of u are phase-normalized so their
// largest-modulus entry is real positive (the matching v column absorbs the
// same factor), which makes the decomposition deterministic up to exact ties.
struct Svd {
  ComplexMatrix u;             // rows(a) x r
  RealVector singular_values;  // length r = min(rows, cols), descending
  ComplexMatrix v;             // cols(a) x r
};

Svd svd(const ComplexMatrix& a);

// Singular values only (descending), via the Gram matrix of the smaller side.
// Cheaper than svd() and accurate to ~eps * s1 in absolute terms, which is
// what the norm evaluations in hot search loops need.
RealVector singular_values(const ComplexMatrix& a);

// Eigendecomposition of a Hermitian matrix; eigenvalues descending, columns
// of the second element are the matching orthonormal eigenvectors.
std::pair<RealVector, ComplexMatrix> herm_eig(const ComplexMatrix& h);

// Orthonormal basis u1 of the top singular subspace of a, its image
// v1 = a.adjoint() * u1 / s1, and the detected multiplicity. Near-ties are
// grouped: every singular value within tol.rel_tol * s1 of s1 counts.
struct TopSingularSubspace {
  ComplexMatrix u1;  // rows(a) x multiplicity
  ComplexMatrix v1;  // cols(a) x multiplicity
  int multiplicity = 0;
  double s1 = 0.0;
};

TopSingularSubspace top_singular_subspace(const ComplexMatrix& a,
                                          const Tolerance& tol = {});

bool is_finite(const ComplexMatrix& a);
void ensure_finite(const ComplexMatrix& a);

// e^{i theta}
Complex unit_circle(double theta);

// Sampling utilities. Gaussian entries make the unit-vector distribution
// rotation invariant; iteration order is fixed so a seeded generator yields
// identical samples on every run.
ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols,
                              std::mt19937_64& rng);
ComplexVector random_unit_vector(Eigen::Index dim, std::mt19937_64& rng);

}  // namespace parallax
