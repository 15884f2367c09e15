#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "helpers.hpp"
#include "parallax/linalg.hpp"
#include "parallax/types.hpp"

using namespace parallax;
using testutil::diag2;
using testutil::diag3;

TEST_SUITE("linalg") {

TEST_CASE("svd of a diagonal matrix reorders the entries") {
  const Svd d = svd(diag2(3.0, 4.0));
  REQUIRE(d.singular_values.size() == 2);
  CHECK(d.singular_values(0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(d.singular_values(1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("svd of the zero matrix") {
  const Svd d = svd(ComplexMatrix::Zero(2, 2));
  CHECK(d.singular_values(0) == 0.0);
  CHECK(d.singular_values(1) == 0.0);
  // factors still orthonormal
  CHECK((d.u.adjoint() * d.u - ComplexMatrix::Identity(2, 2)).norm() <= 1e-10);
}

TEST_CASE("svd reconstructs and has orthonormal factors") {
  std::mt19937_64 rng(11);
  for (const auto [r, c] : {std::pair{4, 4}, {3, 5}, {5, 3}}) {
    const ComplexMatrix a = random_gaussian(r, c, rng);
    const Svd d = svd(a);
    const Eigen::Index k = d.singular_values.size();
    REQUIRE(k == std::min(r, c));
    const ComplexMatrix rec =
        d.u * d.singular_values.asDiagonal().toDenseMatrix().cast<Complex>() *
        d.v.adjoint();
    const double s1 = d.singular_values(0);
    CHECK((a - rec).norm() <= 1e-10 * std::max(1.0, s1));
    CHECK((d.u.adjoint() * d.u - ComplexMatrix::Identity(k, k)).norm() <=
          1e-10);
    CHECK((d.v.adjoint() * d.v - ComplexMatrix::Identity(k, k)).norm() <=
          1e-10);
    for (Eigen::Index i = 0; i + 1 < k; ++i)
      CHECK(d.singular_values(i) >= d.singular_values(i + 1));
  }
}

TEST_CASE("svd phase convention is deterministic") {
  std::mt19937_64 rng(12);
  const ComplexMatrix a = random_gaussian(4, 4, rng);
  const Svd d1 = svd(a);
  const Svd d2 = svd(a);
  CHECK((d1.u - d2.u).norm() == 0.0);
  CHECK((d1.v - d2.v).norm() == 0.0);
  // each u column's largest entry is real positive
  for (Eigen::Index j = 0; j < d1.u.cols(); ++j) {
    Eigen::Index imax = 0;
    for (Eigen::Index i = 0; i < d1.u.rows(); ++i)
      if (std::abs(d1.u(i, j)) > std::abs(d1.u(imax, j))) imax = i;
    CHECK(std::abs(std::imag(d1.u(imax, j))) <= 1e-14);
    CHECK(std::real(d1.u(imax, j)) > 0.0);
  }
}

TEST_CASE("singular_values matches the full decomposition") {
  std::mt19937_64 rng(13);
  for (const auto [r, c] : {std::pair{2, 2}, {4, 6}, {6, 4}, {5, 5}}) {
    const ComplexMatrix a = random_gaussian(r, c, rng);
    const RealVector fast = singular_values(a);
    const RealVector full = svd(a).singular_values;
    REQUIRE(fast.size() == full.size());
    CHECK((fast - full).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, full(0)));
  }
}

TEST_CASE("herm_eig on small fixed matrices") {
  const auto [mu1, v1] = herm_eig(diag2(1.0, -2.0));
  CHECK(mu1(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu1(1) == doctest::Approx(-2.0).epsilon(1e-12));

  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const auto [mu2, v2] = herm_eig(x);
  CHECK(mu2(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu2(1) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("herm_eig residual on a random Hermitian 5x5") {
  std::mt19937_64 rng(14);
  const ComplexMatrix g = random_gaussian(5, 5, rng);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  const auto [mu, vecs] = herm_eig(h);
  for (Eigen::Index j = 0; j < 5; ++j) {
    const ComplexVector res = h * vecs.col(j) - mu(j) * vecs.col(j);
    CHECK(res.norm() <= 1e-10 * std::max(1.0, h.norm()));
  }
  for (Eigen::Index j = 0; j + 1 < 5; ++j) CHECK(mu(j) >= mu(j + 1));
  CHECK((vecs.adjoint() * vecs - ComplexMatrix::Identity(5, 5)).norm() <=
        1e-10);
}

TEST_CASE("herm_eig rejects bad input") {
  ComplexMatrix notherm = ComplexMatrix::Zero(2, 2);
  notherm(0, 1) = 1.0;  // missing the conjugate partner
  CHECK_THROWS_AS(herm_eig(notherm), NotHermitian);
  CHECK_THROWS_AS(herm_eig(ComplexMatrix::Zero(2, 3)), NotSquare);
}

TEST_CASE("top singular subspace: simple gap") {
  const TopSingularSubspace t = top_singular_subspace(diag2(2.0, 1.0));
  CHECK(t.multiplicity == 1);
  CHECK(t.s1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(t.u1(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(t.u1(1, 0)) <= 1e-12);
  CHECK(std::abs(t.v1(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("top singular subspace: full degeneracy") {
  const TopSingularSubspace t =
      top_singular_subspace(ComplexMatrix::Identity(2, 2));
  CHECK(t.multiplicity == 2);
  CHECK((t.u1.adjoint() * t.u1 - ComplexMatrix::Identity(2, 2)).norm() <=
        1e-10);
  CHECK((t.v1.adjoint() * t.v1 - ComplexMatrix::Identity(2, 2)).norm() <=
        1e-10);
}

TEST_CASE("top singular subspace: near tie counts into the block") {
  const TopSingularSubspace t =
      top_singular_subspace(diag3(1.0, 1.0 - 1e-12, 0.5));
  CHECK(t.multiplicity == 2);
  const RealVector s = singular_values(diag3(1.0, 1.0 - 1e-12, 0.5));
  CHECK(s(0) - s(1) <= 1e-8 * s(0));  // the tie the grouping saw
  CHECK(s(0) - s(2) > 1e-8 * s(0));
}

TEST_CASE("top singular subspace rejects the zero matrix") {
  CHECK_THROWS_AS(top_singular_subspace(ComplexMatrix::Zero(3, 3)),
                  ZeroMatrix);
}

TEST_CASE("finite checks") {
  ComplexMatrix a = ComplexMatrix::Identity(2, 2);
  CHECK(is_finite(a));
  a(0, 0) = Complex(std::nan(""), 0.0);
  CHECK(!is_finite(a));
  CHECK_THROWS_AS(ensure_finite(a), NonFinite);
  CHECK_THROWS_AS(svd(a), NonFinite);
}

TEST_CASE("unit_circle") {
  CHECK(std::abs(unit_circle(0.4) ) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(unit_circle(0.0) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(unit_circle(M_PI / 2) - Complex(0.0, 1.0)) <= 1e-15);
}

TEST_CASE("seeded sampling is reproducible") {
  std::mt19937_64 r1(42), r2(42);
  const ComplexMatrix a = random_gaussian(3, 4, r1);
  const ComplexMatrix b = random_gaussian(3, 4, r2);
  CHECK((a - b).norm() == 0.0);
  const ComplexVector u = random_unit_vector(5, r1);
  CHECK(std::abs(u.norm() - 1.0) <= 1e-12);
}

TEST_CASE("tolerance validation") {
  Tolerance t;
  CHECK_NOTHROW(t.validate());
  t.abs_tol = 0.0;
  CHECK_THROWS_AS(t.validate(), Error);
  t = Tolerance{};
  t.grid_points = 4;
  CHECK_THROWS_AS(t.validate(), Error);
  t = Tolerance{};
  t.refine_iters = 0;
  CHECK_THROWS_AS(t.validate(), Error);
}

}  // TEST_SUITE
