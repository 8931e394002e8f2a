#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lorentz/hyperspherical.hpp"
#include "lorentz/su2.hpp"

using namespace lorentz;

TEST_CASE("explicit entry of the fundamental matrix") {
  const double th = std::numbers::pi / 3, ta = 1.0;
  const cplx z = z_series({kHalf, kHalf, kHalf}, th, ta);
  CHECK(std::abs(z - cplx(std::cos(th / 2) * std::cosh(ta / 2), std::sin(th / 2) * std::sinh(ta / 2))) < 1e-15);
  CHECK(std::abs(z_series({kHalf, kHalf, kHalf}, 0, 0) - cplx(1)) == 0.0);
}

TEST_CASE("series and factorized routes agree") {
  for (int t = 0; t <= 8; ++t) {
    const HalfInt l = HalfInt::halves(t);
    for (HalfInt m : projections(l))
      for (HalfInt n : projections(l))
        for (double th : {0.0, 0.4, 2.0, 3.1})
          for (double ta : {-1.2, 0.0, 0.6})
            CHECK(std::abs(z_series({l, m, n}, th, ta) - z_factorized({l, m, n}, th, ta)) < 1e-10);
  }
}

TEST_CASE("Z reduces to the SU(2) function on the rotation slice") {
  for (HalfInt m : projections(HalfInt(2)))
    for (HalfInt n : projections(HalfInt(2)))
      CHECK(std::abs(z_factorized({HalfInt(2), m, n}, 0.9, 0.0) - sph_p(HalfInt(2), m, n, 0.9)) < 1e-13);
}

TEST_CASE("fundamental matrix is unimodular and matches the Euler product") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int s = 0; s < 20; ++s) {
    const GroupPoint g{u(rng), u(rng), u(rng) + 1.6, u(rng), u(rng), u(rng)};
    const CMatrix f = fundamental_matrix(g);
    CHECK(std::abs(f.data().determinant() - cplx(1)) < 1e-13);
    CHECK(max_abs_diff(f, euler_product(g)) < 1e-13);
    CHECK(max_abs_diff(f, rep_matrix(kHalf, HalfInt(0), g)) < 1e-13);
    const cplx mf = m_function({kHalf, kHalf, -kHalf}, g);
    CHECK(std::abs(mf - f.at({kHalf, kHalf, HalfInt(0), HalfInt(0), 0}, {kHalf, -kHalf, HalfInt(0), HalfInt(0), 0})) <
          1e-13);
  }
}

TEST_CASE("representation matrices at the identity") {
  const CMatrix m = rep_matrix(HalfInt(1), kHalf, GroupPoint{});
  CHECK(max_abs_diff(m, CMatrix::identity(m.row_basis())) < 1e-15);
  CHECK(m.rows() == 6);
}

TEST_CASE("boost matrices compose additively in tau") {
  for (int t = 0; t <= 6; ++t) {
    const HalfInt l = HalfInt::halves(t);
    CHECK(max_abs_diff(z_matrix(l, 0, 0.4) * z_matrix(l, 0, -0.9), z_matrix(l, 0, -0.5)) < 1e-12);
    CHECK(max_abs_diff(z_matrix(l, 0.4, 0) * z_matrix(l, 2.1, 0), z_matrix(l, 2.5, 0)) < 1e-12);
  }
}
