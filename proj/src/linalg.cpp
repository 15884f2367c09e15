#include "parallax/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace parallax {

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw Error("tolerances must be positive");
  if (grid_points < 8) throw Error("grid_points must be at least 8");
  if (refine_iters < 1) throw Error("refine_iters must be at least 1");
}

bool is_finite(const ComplexMatrix& a) { return a.allFinite(); }

void ensure_finite(const ComplexMatrix& a) {
  if (!a.allFinite()) throw NonFinite("matrix has NaN or Inf entries");
}

Complex unit_circle(double theta) { return std::polar(1.0, theta); }

namespace {

// Rotate each column so its largest-modulus entry is real positive; the
// partner (the matching V column of an SVD) absorbs the same factor, which
// leaves u * diag(s) * v.adjoint() unchanged.
void fix_column_phases(ComplexMatrix& primary, ComplexMatrix* partner) {
  for (Eigen::Index j = 0; j < primary.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < primary.rows(); ++i) {
      const double m = std::abs(primary(i, j));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    if (best <= 0.0) continue;
    const Complex scale = std::conj(primary(imax, j) / best);
    primary.col(j) *= scale;
    if (partner != nullptr && j < partner->cols()) partner->col(j) *= scale;
  }
}

}  // namespace

Svd svd(const ComplexMatrix& a) {
  ensure_finite(a);
  Eigen::JacobiSVD<ComplexMatrix> dec(a,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  Svd out{dec.matrixU(), dec.singularValues(), dec.matrixV()};
  fix_column_phases(out.u, &out.v);
  return out;
}

RealVector singular_values(const ComplexMatrix& a) {
  const Eigen::Index r = a.rows();
  const Eigen::Index c = a.cols();
  ComplexMatrix gram;
  if (r <= c)
    gram.noalias() = a * a.adjoint();
  else
    gram.noalias() = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  const RealVector ev = es.eigenvalues();  // ascending
  RealVector s(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    s(i) = std::sqrt(std::max(0.0, ev(ev.size() - 1 - i)));
  return s;
}

std::pair<RealVector, ComplexMatrix> herm_eig(const ComplexMatrix& h) {
  ensure_finite(h);
  if (h.rows() != h.cols()) throw NotSquare("herm_eig needs a square matrix");
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > 1e-10 * scale)
    throw NotHermitian("matrix is not Hermitian within 1e-10 (Frobenius)");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::Index n = h.rows();
  RealVector values(n);
  ComplexMatrix vectors(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = es.eigenvalues()(n - 1 - i);  // descending
    vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  fix_column_phases(vectors, nullptr);
  return {std::move(values), std::move(vectors)};
}

TopSingularSubspace top_singular_subspace(const ComplexMatrix& a,
                                          const Tolerance& tol) {
  const Svd dec = svd(a);
  if (dec.singular_values.size() == 0 || dec.singular_values(0) <= 0.0)
    throw ZeroMatrix("top singular subspace of the zero matrix is undefined");
  const double s1 = dec.singular_values(0);
  int m = 1;
  while (m < dec.singular_values.size() &&
         s1 - dec.singular_values(m) <= tol.rel_tol * s1)
    ++m;
  TopSingularSubspace out;
  out.u1 = dec.u.leftCols(m);
  out.v1 = a.adjoint() * out.u1 / s1;
  out.multiplicity = m;
  out.s1 = s1;
  return out;
}

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = nd(rng);
      const double im = nd(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

ComplexVector random_unit_vector(Eigen::Index dim, std::mt19937_64& rng) {
  while (true) {
    ComplexVector v = random_gaussian(dim, 1, rng).col(0);
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

}  // namespace parallax
