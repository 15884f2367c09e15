#pragma once

#include <random>

#include "parallax/linalg.hpp"
#include "parallax/types.hpp"

namespace testutil {

using parallax::Complex;
using parallax::ComplexMatrix;
using parallax::ComplexVector;

inline ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline ComplexMatrix diag3(Complex a, Complex b, Complex c) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

// Haar-ish random unitary via QR of a Gaussian matrix.
inline ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  const ComplexMatrix g = parallax::random_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // normalize R's diagonal phases so the distribution is unitarily invariant
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace testutil
