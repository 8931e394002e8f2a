#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lorentz/su2.hpp"
#include "oracles.hpp"

using namespace lorentz;

namespace {
const double kPi = std::numbers::pi;
std::vector<HalfInt> spins(int twice_max) {
  std::vector<HalfInt> out;
  for (int t = 0; t <= twice_max; ++t) out.push_back(HalfInt::halves(t));
  return out;
}
}  // namespace

TEST_CASE("Wigner d agrees with the matrix exponential of J_y") {
  for (HalfInt l : spins(8))
    for (double beta : {0.0, 0.3, 1.2, kPi / 2, 2.9, kPi}) {
      const auto d = oracle::wigner_d_expm(l, beta);
      const auto ps = projections(l);
      double worst = 0;
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
          worst = std::max(worst, std::abs(d(static_cast<long>(i), static_cast<long>(j)) - wigner_d(l, ps[i], ps[j], beta)));
      CHECK_MESSAGE(worst < 1e-12, "l=" << l.str() << " beta=" << beta);
    }
}

TEST_CASE("Wigner d frozen values") {
  const double b = 0.7;
  CHECK(wigner_d(HalfInt(1), HalfInt(0), HalfInt(0), b) == doctest::Approx(std::cos(b)).epsilon(1e-14));
  CHECK(wigner_d(HalfInt(1), HalfInt(1), HalfInt(0), b) == doctest::Approx(-std::sin(b) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(wigner_d(kHalf, kHalf, -kHalf, b) == doctest::Approx(-std::sin(b / 2)).epsilon(1e-14));
  CHECK(wigner_d(HalfInt(2), HalfInt(0), HalfInt(0), b) ==
        doctest::Approx(0.5 * (3 * std::cos(b) * std::cos(b) - 1)).epsilon(1e-14));
}

TEST_CASE("sph_p carries the i^{m-n} phase of the reflected Wigner d") {
  for (HalfInt l : spins(6))
    for (HalfInt m : projections(l))
      for (HalfInt n : projections(l)) {
        const double th = 1.1;
        const int k = ((m - n).twice() / 2 % 4 + 4) % 4;
        const cplx phase = std::pow(cplx(0, 1), k);
        CHECK(std::abs(sph_p(l, m, n, th) - phase * wigner_d(l, m, n, -th)) < 1e-13);
      }
}

TEST_CASE("jac_p frozen values") {
  const double tau = 0.8;
  const double a = jac_p(kHalf, kHalf, kHalf, tau), b = jac_p(kHalf, kHalf, -kHalf, tau);
  const double c = jac_p(kHalf, -kHalf, kHalf, tau), d = jac_p(kHalf, -kHalf, -kHalf, tau);
  CHECK(a * d - b * c == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a == doctest::Approx(std::cosh(tau / 2)).epsilon(1e-14));
  CHECK(jac_p(HalfInt(1), HalfInt(0), HalfInt(0), tau) == doctest::Approx(std::cosh(tau)).epsilon(1e-14));
}

TEST_CASE("Clebsch-Gordan frozen values (Condon-Shortley)") {
  const double s2 = std::sqrt(0.5), s13 = std::sqrt(1.0 / 3), s23 = std::sqrt(2.0 / 3);
  CHECK(cg_su2({kHalf, kHalf, HalfInt(0), kHalf, -kHalf, HalfInt(0)}) == doctest::Approx(s2));
  CHECK(cg_su2({kHalf, kHalf, HalfInt(0), -kHalf, kHalf, HalfInt(0)}) == doctest::Approx(-s2));
  CHECK(cg_su2({kHalf, kHalf, HalfInt(1), kHalf, -kHalf, HalfInt(0)}) == doctest::Approx(s2));
  CHECK(cg_su2({HalfInt(1), HalfInt(1), HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(0)}) == doctest::Approx(s23));
  CHECK(cg_su2({HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)}) == doctest::Approx(0.0));
  CHECK(cg_su2({HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(-1), HalfInt(0)}) == doctest::Approx(s13));
  CHECK(cg_su2({HalfInt(1), kHalf, kHalf, HalfInt(1), -kHalf, kHalf}) == doctest::Approx(s23));
  CHECK(cg_su2({HalfInt(1), kHalf, kHalf, HalfInt(0), kHalf, kHalf}) == doctest::Approx(-s13));
}

TEST_CASE("Clebsch-Gordan selection rules give exact zeros") {
  CHECK(cg_su2({HalfInt(1), HalfInt(1), HalfInt(3), HalfInt(0), HalfInt(0), HalfInt(0)}) == 0.0);
  CHECK(cg_su2({HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0)}) == 0.0);
  CHECK(cg_su2({kHalf, HalfInt(1), HalfInt(1), kHalf, HalfInt(0), kHalf}) == 0.0);
  CHECK_FALSE(cg_allowed({HalfInt(2), HalfInt(0), HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)}));
  CHECK(cg_su2_3f2({HalfInt(1), HalfInt(1), HalfInt(3), HalfInt(0), HalfInt(0), HalfInt(0)}) == 0.0);
}

TEST_CASE("Clebsch-Gordan coefficients match the coupled highest-weight oracle") {
  // |l l> in l1 (x) l2 from the kernel of the total raising operator, then lower with J-.
  for (HalfInt l1 : spins(4))
    for (HalfInt l2 : spins(4))
      for (HalfInt l = abs(l1 - l2); l <= l1 + l2; l += HalfInt(1)) {
        const auto a = oracle::spin_matrices(l1), b = oracle::spin_matrices(l2);
        const long d1 = a.j3.rows(), d2 = b.j3.rows();
        auto kr = [](const oracle::MatrixXc& x, const oracle::MatrixXc& y) {
          oracle::MatrixXc o(x.rows() * y.rows(), x.cols() * y.cols());
          for (long i = 0; i < x.rows(); ++i)
            for (long j = 0; j < x.cols(); ++j) o.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
          return o;
        };
        const oracle::MatrixXc jp = kr(a.jp, oracle::MatrixXc::Identity(d2, d2)) + kr(oracle::MatrixXc::Identity(d1, d1), b.jp);
        const oracle::MatrixXc jm = jp.adjoint();
        // Restrict to total projection l.
        std::vector<long> idx;
        for (long i = 0; i < d1; ++i)
          for (long j = 0; j < d2; ++j)
            if (std::abs(l1.value() - i + l2.value() - j - l.value()) < 1e-9) idx.push_back(i * d2 + j);
        oracle::MatrixXc sub(jp.rows(), static_cast<long>(idx.size()));
        for (std::size_t c = 0; c < idx.size(); ++c) sub.col(static_cast<long>(c)) = jp.col(idx[c]);
        Eigen::JacobiSVD<oracle::MatrixXc> svd(sub, Eigen::ComputeFullV);
        Eigen::VectorXcd kernel = svd.matrixV().col(static_cast<long>(idx.size()) - 1);
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d1 * d2);
        for (std::size_t c = 0; c < idx.size(); ++c) v(idx[c]) = kernel(static_cast<long>(c));
        // Condon-Shortley: <l1 l1; l2 (l - l1) | l l> > 0.
        const long ref = (l1 + l2 - l).as_int();
        const std::complex<double> pivot = v(ref);
        v *= std::abs(pivot) / pivot;
        for (HalfInt m = l; m >= -l; m -= HalfInt(1)) {
          for (long i = 0; i < d1; ++i)
            for (long j = 0; j < d2; ++j) {
              const HalfInt mi = l1 - HalfInt(static_cast<int>(i)), mj = l2 - HalfInt(static_cast<int>(j));
              const double expect = (mi + mj == m) ? v(i * d2 + j).real() : 0.0;
              CHECK_MESSAGE(std::abs(cg_su2({l1, l2, l, mi, mj, m}) - expect) < 1e-12,
                            l1.str() << " " << l2.str() << " " << l.str() << " " << m.str());
            }
          const double lv = l.value(), mv = m.value();
          if (m > -l) v = jm * v / std::sqrt((lv + mv) * (lv - mv + 1));
        }
      }
}
