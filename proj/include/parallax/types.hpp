#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace parallax {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Numeric tolerances and search effort shared by every decider. Verdicts are
// computed once with these knobs and carry their raw gaps, so callers can
// re-threshold without recomputing.
struct Tolerance {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  int grid_points = 720;  // unit-circle grid for lambda/theta searches
  int refine_iters = 60;  // golden-section refinement iterations

  // Combined absolute + relative slack at a given scale.
  double slack(double scale) const { return abs_tol + rel_tol * scale; }

  void validate() const;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PARALLAX_ERROR_TYPE(Name)                          \
  struct Name : Error {                                    \
    explicit Name(const std::string& msg) : Error(msg) {}  \
  }

PARALLAX_ERROR_TYPE(ShapeMismatch);
PARALLAX_ERROR_TYPE(NonFinite);
PARALLAX_ERROR_TYPE(NotHermitian);
PARALLAX_ERROR_TYPE(NotSquare);
PARALLAX_ERROR_TYPE(ZeroMatrix);
PARALLAX_ERROR_TYPE(BadHandle);
PARALLAX_ERROR_TYPE(SingularMatrix);
PARALLAX_ERROR_TYPE(TooLarge);
PARALLAX_ERROR_TYPE(ComplexInput);
PARALLAX_ERROR_TYPE(NotUnit);
PARALLAX_ERROR_TYPE(NotMinimal);
PARALLAX_ERROR_TYPE(NotIdempotent);
PARALLAX_ERROR_TYPE(BadDimension);
PARALLAX_ERROR_TYPE(BadBasis);
PARALLAX_ERROR_TYPE(ParseError);

#undef PARALLAX_ERROR_TYPE

}  // namespace parallax
