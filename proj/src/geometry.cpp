#include "parallax/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "parallax/linalg.hpp"

namespace parallax {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

}  // namespace

CircleMax max_on_circle(const std::function<double(double)>& g,
                        int grid_points, int refine_iters) {
  const int n = std::max(grid_points, 8);
  double best_t = 0.0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    const double v = g(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }

  // Golden-section refinement on the bracket around the best grid point.
  const double h = kTwoPi / n;
  double lo = best_t - h;
  double hi = best_t + h;
  const double gr = 0.61803398874989484820;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = g(c);
  double fd = g(d);
  for (int it = 0; it < refine_iters; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = g(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = g(d);
    }
  }
  if (fc > best_v) {
    best_v = fc;
    best_t = c;
  }
  if (fd > best_v) {
    best_v = fd;
    best_t = d;
  }
  return {wrap_angle(best_t), best_v};
}

ParallelVerdict make_parallel_verdict(double achieved, double bound,
                                      Complex lambda, const Tolerance& tol) {
  ParallelVerdict v;
  v.achieved = achieved;
  v.bound = bound;
  v.gap = std::max(0.0, bound - achieved);
  v.lambda_star = lambda;
  v.parallel = v.gap <= tol.slack(bound);
  return v;
}

ParallelVerdict is_parallel(const ComplexMatrix& a, const ComplexMatrix& b,
                            const NormHandle& h, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("is_parallel needs equal shapes");
  tol.validate();
  const double na = matrix_norm(a, h);
  const double nb = matrix_norm(b, h);
  const auto g = [&](double t) {
    return matrix_norm(a + unit_circle(t) * b, h);
  };
  const CircleMax cm = max_on_circle(g, tol.grid_points, tol.refine_iters);
  return make_parallel_verdict(cm.value, na + nb, unit_circle(cm.theta), tol);
}

namespace {

struct DiskMin {
  Complex alpha{0.0, 0.0};
  double value = 0.0;
};

// Minimize a convex f over the disk |alpha| <= radius: coarse polar grid,
// then compass descent with a shrinking step.
DiskMin min_on_disk(const std::function<double(Complex)>& f, double radius) {
  DiskMin best{Complex(0.0, 0.0), f(Complex(0.0, 0.0))};
  const int n_r = 12;
  const int n_a = 24;
  for (int i = 1; i <= n_r; ++i) {
    const double r = radius * i / n_r;
    for (int k = 0; k < n_a; ++k) {
      const Complex al = std::polar(r, kTwoPi * k / n_a);
      const double v = f(al);
      if (v < best.value) best = {al, v};
    }
  }

  static const Complex dirs[8] = {
      {1.0, 0.0},  {-1.0, 0.0}, {0.0, 1.0},  {0.0, -1.0},
      {0.7071067811865476, 0.7071067811865476},
      {0.7071067811865476, -0.7071067811865476},
      {-0.7071067811865476, 0.7071067811865476},
      {-0.7071067811865476, -0.7071067811865476}};
  double step = radius > 0.0 ? radius / n_r : 0.0;
  const double floor_step = 1e-13 * std::max(1.0, radius);
  int rounds = 0;
  while (step > floor_step && rounds < 400) {
    ++rounds;
    bool improved = false;
    DiskMin cand = best;
    for (const Complex& d : dirs) {
      const Complex al = best.alpha + step * d;
      const double v = f(al);
      if (v < cand.value) {
        cand = {al, v};
        improved = true;
      }
    }
    if (improved)
      best = cand;
    else
      step *= 0.5;
  }
  return best;
}

}  // namespace

BjoVerdict is_bj_orthogonal(const ComplexMatrix& x, const ComplexMatrix& y,
                            const NormHandle& h, const Tolerance& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw ShapeMismatch("is_bj_orthogonal needs equal shapes");
  tol.validate();
  const double nx = matrix_norm(x, h);
  const double ny = matrix_norm(y, h);
  BjoVerdict out;
  if (ny == 0.0) {
    out.orthogonal = true;
    out.alpha_star = Complex(0.0, 0.0);
    out.min_value = nx;
    return out;
  }
  // The minimizer satisfies |alpha| <= 2 ||x|| / ||y||: beyond that,
  // ||x + alpha y|| >= |alpha| ||y|| - ||x|| > ||x||.
  const double radius = 2.0 * nx / ny;
  const auto f = [&](Complex al) { return matrix_norm(x + al * y, h); };
  const DiskMin dm = min_on_disk(f, radius);
  out.alpha_star = dm.alpha;
  out.min_value = dm.value;
  out.orthogonal = dm.value >= nx - tol.slack(nx);
  return out;
}

ParallelVerdict vector_parallel(const ComplexVector& u, const ComplexVector& v,
                                VectorNormTag vt, const Tolerance& tol) {
  if (u.size() != v.size())
    throw ShapeMismatch("vector_parallel needs equal lengths");
  tol.validate();
  const double nu = vector_norm(u, vt);
  const double nv = vector_norm(v, vt);
  const auto g = [&](double t) {
    return vector_norm(u + unit_circle(t) * v, vt);
  };
  const CircleMax cm = max_on_circle(g, tol.grid_points, tol.refine_iters);
  return make_parallel_verdict(cm.value, nu + nv, unit_circle(cm.theta), tol);
}

}  // namespace parallax
