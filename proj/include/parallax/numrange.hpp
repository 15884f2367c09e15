#pragma once

#include <vector>

#include "parallax/types.hpp"

namespace parallax {

// Support function of the numerical range W(t) in direction theta:
// the largest eigenvalue of the Hermitian part of e^{-i theta} t. W(t) is
// convex (Toeplitz-Hausdorff), so these values determine it completely.
double support_value(const ComplexMatrix& t, double theta);

// Membership test: z lies in W(t) iff
//   min over theta of [support_value(t, theta) - Re(e^{-i theta} z)] >= 0.
// Boundary points are accepted via the tolerance inflation
// -(abs_tol + rel_tol * ||t||_op).
bool in_numerical_range(const ComplexMatrix& t, Complex z,
                        const Tolerance& tol = {});

// Numerical radius w(t) = max_theta support_value(t, theta)
//                       = max over unit xi of |xi* t xi|.
double numerical_radius(const ComplexMatrix& t, const Tolerance& tol = {});

// Radius together with an attaining direction: xi is a top eigenvector of
// the Hermitian part of e^{-i theta*} t, and value = xi* t xi has modulus
// equal to the radius.
struct RadiusAttainment {
  double radius = 0.0;
  double theta = 0.0;
  ComplexVector xi;
  Complex value{0.0, 0.0};
};

RadiusAttainment numerical_radius_attained(const ComplexMatrix& t,
                                           const Tolerance& tol = {});

// Boundary polyline of W(t): for each of `count` equally spaced directions,
// the point xi* t xi given by the top eigenvector xi of the rotated
// Hermitian part. Vertices of the convex hull of W(t) in direction order.
std::vector<Complex> boundary_points(const ComplexMatrix& t, int count);

}  // namespace parallax
