#include "parallax/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallax/geometry.hpp"
#include "parallax/linalg.hpp"
#include "parallax/norms.hpp"

namespace parallax {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

ComplexMatrix rotated_hermitian_part(const ComplexMatrix& t, double theta) {
  const Complex w = unit_circle(-theta);
  return 0.5 * (w * t + std::conj(w) * t.adjoint());
}

void check_square(const ComplexMatrix& t, const char* who) {
  if (t.rows() != t.cols())
    throw NotSquare(std::string(who) + " needs a square matrix");
}

}  // namespace

double support_value(const ComplexMatrix& t, double theta) {
  check_square(t, "support_value");
  ensure_finite(t);
  const ComplexMatrix h = rotated_hermitian_part(t, theta);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(t.rows() - 1);
}

bool in_numerical_range(const ComplexMatrix& t, Complex z,
                        const Tolerance& tol) {
  check_square(t, "in_numerical_range");
  tol.validate();
  // z in W(t) iff every supporting half-plane of W(t) contains it; minimize
  // the margin over directions and accept boundary contact within slack.
  const auto neg_margin = [&](double theta) {
    return std::real(unit_circle(-theta) * z) - support_value(t, theta);
  };
  const CircleMax cm =
      max_on_circle(neg_margin, tol.grid_points, tol.refine_iters);
  const double scale = matrix_norm(t, NormHandle::schatten(
                                          std::numeric_limits<double>::infinity()));
  return -cm.value >= -tol.slack(scale);
}

double numerical_radius(const ComplexMatrix& t, const Tolerance& tol) {
  check_square(t, "numerical_radius");
  tol.validate();
  const auto g = [&](double theta) { return support_value(t, theta); };
  const CircleMax cm = max_on_circle(g, tol.grid_points, tol.refine_iters);
  return std::max(0.0, cm.value);
}

RadiusAttainment numerical_radius_attained(const ComplexMatrix& t,
                                           const Tolerance& tol) {
  check_square(t, "numerical_radius_attained");
  tol.validate();
  const auto g = [&](double theta) { return support_value(t, theta); };
  const CircleMax cm = max_on_circle(g, tol.grid_points, tol.refine_iters);

  RadiusAttainment out;
  out.theta = cm.theta;
  const auto [values, vectors] = herm_eig(rotated_hermitian_part(t, cm.theta));
  out.xi = vectors.col(0);
  out.value = (out.xi.adjoint() * t * out.xi).value();
  out.radius = std::max(0.0, cm.value);
  return out;
}

std::vector<Complex> boundary_points(const ComplexMatrix& t, int count) {
  check_square(t, "boundary_points");
  if (count < 1) throw Error("boundary_points needs count >= 1");
  std::vector<Complex> pts;
  pts.reserve(count);
  for (int j = 0; j < count; ++j) {
    const double theta = kTwoPi * j / count;
    const auto [values, vectors] =
        herm_eig(rotated_hermitian_part(t, theta));
    const ComplexVector xi = vectors.col(0);
    pts.push_back((xi.adjoint() * t * xi).value());
  }
  return pts;
}

}  // namespace parallax
