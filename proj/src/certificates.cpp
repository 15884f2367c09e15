#include "parallax/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallax/linalg.hpp"
#include "parallax/numrange.hpp"

namespace parallax {

namespace {

const NormHandle kOpNorm =
    NormHandle::schatten(std::numeric_limits<double>::infinity());

void check_equal_square(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* who) {
  if (a.rows() != a.cols())
    throw NotSquare(std::string(who) + " needs square matrices");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch(std::string(who) + " needs equal shapes");
}

}  // namespace

std::pair<ParallelVerdict, std::optional<OpNormCertificate>>
opnorm_parallel_decide(const ComplexMatrix& a, const ComplexMatrix& b,
                       const Tolerance& tol) {
  check_equal_square(a, b, "opnorm_parallel_decide");
  ensure_finite(b);
  tol.validate();

  const TopSingularSubspace top = top_singular_subspace(a, tol);
  const double nb = matrix_norm(b, kOpNorm);

  // Compress b to the top singular pair subspaces of a. Every unit xi gives
  // witnesses x = u1 xi, y = v1 xi with x* a y = ||a|| and x* b y = xi* m xi,
  // so a || b exactly when the numerical range of m reaches modulus ||b||.
  const ComplexMatrix m = top.u1.adjoint() * b * top.v1;
  const RadiusAttainment att = numerical_radius_attained(m, tol);
  const bool parallel = att.radius >= nb - tol.slack(nb);

  const Complex z = att.value;
  const Complex lambda =
      std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : Complex(1.0, 0.0);

  ComplexVector x = top.u1 * att.xi;
  ComplexVector y = top.v1 * att.xi;
  // v1 columns are orthonormal only up to the multiplicity tolerance;
  // renormalize so the certificate vectors are exactly unit.
  const double ynorm = y.norm();
  if (ynorm > 0.0) y /= ynorm;

  const double bound = top.s1 + nb;
  const double achieved = matrix_norm(a + lambda * b, kOpNorm);
  ParallelVerdict verdict;
  verdict.parallel = parallel;
  verdict.lambda_star = lambda;
  verdict.achieved = achieved;
  verdict.bound = bound;
  verdict.gap = std::max(0.0, bound - achieved);

  std::optional<OpNormCertificate> cert;
  if (parallel) {
    OpNormCertificate c;
    c.x = std::move(x);
    c.y = std::move(y);
    c.lambda = lambda;
    c.x_ay = (c.x.adjoint() * a * c.y).value();
    c.x_by = (c.x.adjoint() * b * c.y).value();
    cert = std::move(c);
  }
  return {verdict, std::move(cert)};
}

bool opnorm_range_condition(const ComplexMatrix& a, const ComplexMatrix& b,
                            Complex lambda, const Tolerance& tol) {
  check_equal_square(a, b, "opnorm_range_condition");
  const TopSingularSubspace top = top_singular_subspace(a, tol);
  const double nb = matrix_norm(b, kOpNorm);
  const ComplexMatrix m = lambda * (top.u1.adjoint() * b * top.v1);
  return in_numerical_range(m, Complex(-nb, 0.0), tol);
}

SchattenCondition schatten_condition(const ComplexMatrix& a,
                                     const ComplexMatrix& b, double p,
                                     const Tolerance& tol) {
  check_equal_square(a, b, "schatten_condition");
  if (!(p > 1.0) || std::isinf(p))
    throw BadHandle("schatten_condition needs 1 < p < inf");
  tol.validate();

  const Svd dec = svd(a);
  const Eigen::Index n = a.rows();
  const double s1 = dec.singular_values(0);
  if (s1 <= 0.0 || dec.singular_values(n - 1) <= tol.rel_tol * s1)
    throw SingularMatrix("schatten_condition needs a nonsingular matrix");

  // Polar pieces of a = d c: d = u diag(s) u*, c = u v*. Then
  // d^{p-1} c = u diag(s^{p-1}) v*.
  RealVector sp(n);
  for (Eigen::Index i = 0; i < n; ++i)
    sp(i) = std::pow(dec.singular_values(i), p - 1.0);
  const ComplexMatrix dp1c = dec.u * sp.asDiagonal() * dec.v.adjoint();

  const NormHandle hp = NormHandle::schatten(p);
  const double na = matrix_norm(a, hp);
  const double nb = matrix_norm(b, hp);

  SchattenCondition out;
  out.lhs = std::abs(trace_inner(dp1c, b));
  // rhs = ||b||_p ||d||_p^p / ||a||_p with ||d||_p = ||a||_p (same spectrum).
  out.rhs = nb * std::pow(na, p - 1.0);
  out.holds = std::abs(out.lhs - out.rhs) <=
              tol.abs_tol + tol.rel_tol * std::max(1.0, out.rhs);
  return out;
}

std::optional<DualCertificate> kyfan_certificate(const ComplexMatrix& a,
                                                 const ComplexMatrix& b, int k,
                                                 const Tolerance& tol) {
  check_equal_square(a, b, "kyfan_certificate");
  const Eigen::Index n = a.rows();
  if (k < 1 || k > n) throw BadHandle("kyfan_certificate needs 1 <= k <= n");
  tol.validate();

  const NormHandle hk = NormHandle::ky_fan(k);
  const ParallelVerdict verdict = is_parallel(a, b, hk, tol);
  if (!verdict.parallel) return std::nullopt;

  const Svd dec = svd(a + verdict.lambda_star * b);

  DualCertificate cert;
  cert.k = k;
  cert.f = dec.u.leftCols(k) * dec.v.leftCols(k).adjoint();
  cert.sigma_gap = (k < n) ? dec.singular_values(k - 1) - dec.singular_values(k)
                           : dec.singular_values(n - 1);
  cert.tie_warning = cert.sigma_gap <= tol.rel_tol * dec.singular_values(0);

  // tr(f* a) = tr(a f*) by cyclicity, i.e. the trace pairing below.
  cert.trace_a = trace_inner(a, cert.f);
  cert.trace_b = trace_inner(b, cert.f);
  // The witness has a free global phase (only |tr(f* b)| matters); fix the
  // gauge so the a-pairing is real positive. This removes the first-order
  // phase error the lambda search leaves in the svd factors.
  if (const double ma = std::abs(cert.trace_a); ma > 0) {
    const Complex mu = cert.trace_a / ma;
    cert.f *= mu;
    cert.trace_a = Complex(ma, 0.0);
    cert.trace_b *= std::conj(mu);
  }
  // f is a partial isometry; the full svd keeps its spectrum sharp instead
  // of inheriting the gram-path noise of the fast routine.
  const RealVector fs = svd(cert.f).singular_values;
  cert.f_opnorm = fs(0);
  cert.f_tracenorm = fs.sum();
  cert.a_norm = matrix_norm(a, hk);
  cert.b_norm = matrix_norm(b, hk);

  const bool feasible_op = cert.f_opnorm <= 1.0 + tol.slack(1.0);
  const bool feasible_tr = cert.f_tracenorm <= k + tol.slack(double(k));
  const bool pairs_a =
      std::abs(cert.trace_a - Complex(cert.a_norm, 0.0)) <= tol.slack(cert.a_norm);
  const bool pairs_b =
      std::abs(std::abs(cert.trace_b) - cert.b_norm) <= tol.slack(cert.b_norm);
  cert.checks_pass = feasible_op && feasible_tr && pairs_a && pairs_b;
  return cert;
}

std::optional<DualCertificate> trace_certificate(const ComplexMatrix& a,
                                                 const ComplexMatrix& b,
                                                 const Tolerance& tol) {
  check_equal_square(a, b, "trace_certificate");
  return kyfan_certificate(a, b, static_cast<int>(a.rows()), tol);
}

namespace {

// Extreme points of the unit balls that matter here. For the l1 ball these
// are the signed basis vectors; for the linf ball the 2^n sign vectors.
std::vector<RealVector> signed_basis(Eigen::Index n) {
  std::vector<RealVector> out;
  out.reserve(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    RealVector e = RealVector::Zero(n);
    e(i) = 1.0;
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

std::vector<RealVector> sign_vectors(Eigen::Index n) {
  std::vector<RealVector> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    RealVector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
      v(i) = (bits >> i) & 1 ? -1.0 : 1.0;
    out.push_back(v);
  }
  return out;
}

double induced_norm_real(const RealMatrix& a, VectorNormTag vt) {
  double best = 0.0;
  if (vt == VectorNormTag::L1) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      best = std::max(best, a.col(j).cwiseAbs().sum());
  } else {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      best = std::max(best, a.row(i).cwiseAbs().sum());
  }
  return best;
}

}  // namespace

std::optional<ExtremePointDecomposition> extreme_point_check(
    const ComplexMatrix& a, const ComplexMatrix& b, VectorNormTag vt,
    const Tolerance& tol) {
  check_equal_square(a, b, "extreme_point_check");
  if (vt == VectorNormTag::L2)
    throw BadHandle("extreme_point_check covers induced l1/linf only");
  const Eigen::Index n = a.rows();
  if (n > 12)
    throw TooLarge("extreme_point_check enumerates 2^n sign vectors; n <= 12");
  const double scale = std::max(1.0, std::max(a.cwiseAbs().maxCoeff(),
                                              b.cwiseAbs().maxCoeff()));
  if (a.imag().cwiseAbs().maxCoeff() > 1e-12 * scale ||
      b.imag().cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ComplexInput("extreme_point_check needs real matrices");
  tol.validate();

  const RealMatrix ar = a.real();
  const RealMatrix br = b.real();
  const double na = induced_norm_real(ar, vt);
  const double nb = induced_norm_real(br, vt);

  // Primal extremes carry y, dual extremes carry x; the pairing is x^T a y.
  const std::vector<RealVector> ys =
      (vt == VectorNormTag::L1) ? signed_basis(n) : sign_vectors(n);
  const std::vector<RealVector> xs =
      (vt == VectorNormTag::L1) ? sign_vectors(n) : signed_basis(n);

  for (const RealVector& y : ys) {
    const RealVector ay = ar * y;
    const RealVector by = br * y;
    for (const RealVector& x : xs) {
      if (x.dot(ay) < na - tol.slack(na)) continue;  // not in V(a)
      const double c = x.dot(by);
      if (std::abs(c) >= nb - tol.slack(nb)) {
        ExtremePointDecomposition dec;
        dec.xs = {x};
        dec.ys = {y};
        dec.weights = {1.0};
        dec.value = std::abs(c);
        return dec;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Candidate norming directions for ||a|| under the given vector norm. For l1
// the maximum over the ball is attained at a basis vector; for linf at a
// phase vector aligned with some row (sign vectors are included for the real
// case); for l2 on the top right singular subspace, which is sampled when it
// has dimension > 1.
std::vector<ComplexVector> norming_candidates(const ComplexMatrix& a,
                                              VectorNormTag vt,
                                              const Tolerance& tol) {
  const Eigen::Index n = a.cols();
  std::vector<ComplexVector> out;
  switch (vt) {
    case VectorNormTag::L1: {
      for (Eigen::Index j = 0; j < n; ++j) {
        ComplexVector e = ComplexVector::Zero(n);
        e(j) = 1.0;
        out.push_back(e);
      }
      break;
    }
    case VectorNormTag::Linf: {
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        ComplexVector y(n);
        for (Eigen::Index j = 0; j < n; ++j) {
          const Complex aij = a(i, j);
          y(j) = std::abs(aij) > 0.0 ? std::conj(aij) / std::abs(aij)
                                     : Complex(1.0, 0.0);
        }
        out.push_back(y);
      }
      if (n <= 12) {
        for (const RealVector& s : sign_vectors(n))
          out.push_back(s.cast<Complex>());
      }
      break;
    }
    case VectorNormTag::L2: {
      const TopSingularSubspace top = top_singular_subspace(a, tol);
      for (int j = 0; j < top.multiplicity; ++j) {
        ComplexVector y = top.v1.col(j);
        const double norm = y.norm();
        if (norm > 0.0) out.push_back(y / norm);
      }
      if (top.multiplicity > 1) {
        std::mt19937_64 rng(0x715ad1ceull);
        for (int s = 0; s < 200; ++s) {
          const ComplexVector w =
              random_unit_vector(top.multiplicity, rng);
          ComplexVector y = top.v1 * w;
          const double norm = y.norm();
          if (norm > 0.0) out.push_back(y / norm);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

VectorLevelResult vector_level_sufficiency(const ComplexMatrix& a,
                                           const ComplexMatrix& b,
                                           VectorNormTag vt,
                                           const Tolerance& tol) {
  check_equal_square(a, b, "vector_level_sufficiency");
  tol.validate();
  const NormHandle h = NormHandle::induced(vt);
  const double na = matrix_norm(a, h);
  const double nb = matrix_norm(b, h);

  VectorLevelResult res;
  for (const ComplexVector& y : norming_candidates(a, vt, tol)) {
    const ComplexVector ay = a * y;
    const ComplexVector by = b * y;
    if (vector_norm(ay, vt) < na - tol.slack(na)) continue;
    // The implication needs y to norm b as well: nu(b y) = ||b||. Without it
    // a y || b y can hold (e.g. b y = 0) while a and b are far from parallel.
    if (vector_norm(by, vt) < nb - tol.slack(nb)) continue;
    if (vector_parallel(ay, by, vt, tol).parallel) {
      res.found = true;
      res.y = y;
      break;
    }
  }
  if (res.found)
    res.matrix_confirmed = is_parallel(a, b, h, tol).parallel;
  return res;
}

}  // namespace parallax
