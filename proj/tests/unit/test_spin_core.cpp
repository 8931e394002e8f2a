#include <cmath>

#include "doctest.h"
#include "lorentz/cmatrix.hpp"
#include "lorentz/special.hpp"

using namespace lorentz;

TEST_CASE("half-integers parse and print losslessly") {
  for (const char* s : {"0", "1/2", "-1/2", "3/2", "7", "-5/2"}) CHECK(HalfInt::parse(s).str() == s);
  CHECK(HalfInt::parse("4/2") == HalfInt(2));
  CHECK(HalfInt::parse(" 3/2 ").twice() == 3);
  CHECK_THROWS_AS(HalfInt::parse("3/4"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(kHalf.as_int(), std::domain_error);
  CHECK(HalfInt(3).as_int() == 3);
}

TEST_CASE("projections and carrier bases are m-descending") {
  const auto p = projections(HalfInt::halves(3));
  REQUIRE(p.size() == 4);
  CHECK(p.front() == HalfInt::halves(3));
  CHECK(p.back() == HalfInt::halves(-3));
  const auto b = enumerate_basis(HalfInt(1), kHalf);
  REQUIRE(b.size() == 6);
  CHECK(b[0].m == HalfInt(1));
  CHECK(b[0].mdot == kHalf);
  CHECK(b[1].mdot == -kHalf);
  CHECK_THROWS_AS(projections(-kHalf), std::domain_error);
}

TEST_CASE("factorials and terminating hypergeometric series") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(20) == 2432902008176640000.0);
  CHECK(std::abs(ln_factorial(30) - std::lgamma(31.0)) < 1e-12);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
  CHECK(inv_gamma_int(0) == 0.0);
  CHECK(inv_gamma_int(-3) == 0.0);
  CHECK(inv_gamma_int(4) == doctest::Approx(1.0 / 6));
  // 2F1(-n, b; c; x) against the Chu-Vandermonde sum at x = 1.
  const cplx v = hyp2f1_term(-3, 2.5, 4.0, 1.0);
  CHECK(std::abs(v - (std::tgamma(4.0) * std::tgamma(4.5)) / (std::tgamma(7.0) * std::tgamma(1.5))) < 1e-14);
  CHECK_THROWS_AS(hyp2f1_term(0.5, 0.5, 1.0, 0.3), std::domain_error);
  // Pfaff-Saalschutz: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
  auto poch = [](double x, int n) {
    double p = 1;
    for (int k = 0; k < n; ++k) p *= x + k;
    return p;
  };
  const double a = 0.3, b = 1.7, c = 2.2;
  const int n = 4;
  const double saal = poch(c - a, n) * poch(c - b, n) / (poch(c, n) * poch(c - a - b, n));
  CHECK(std::abs(hyp3f2_unit(-n, a, b, c, 1 + a + b - c - n) - saal) < 1e-12);
}

TEST_CASE("compensated summation keeps small terms") {
  CompensatedSum<double> s;
  s.add(1e16);
  for (int i = 0; i < 10; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 10.0);
}

TEST_CASE("labelled matrices align by label") {
  const Basis basis = enumerate_basis(kHalf, HalfInt(0));
  CMatrix a(basis, basis, (MatrixXc(2, 2) << 1, 2, 3, 4).finished());
  const Basis rev{basis[1], basis[0]};
  const CMatrix b = a.permuted(rev, rev);
  CHECK(b(0, 0) == cplx(4));
  CHECK(max_abs_diff(a, b) == 0.0);
  CHECK(a.at(basis[0], basis[1]) == cplx(2));
  CHECK_THROWS_AS(a.row_of(BasisIndex{HalfInt(3), HalfInt(0), HalfInt(0), HalfInt(0), 0}), std::out_of_range);
  const CMatrix k = kron(a, CMatrix::identity(enumerate_basis(kHalf, HalfInt(0))));
  CHECK(k.rows() == 4);
  CHECK(k(1, 1) == cplx(1));
  CHECK(k(0, 2) == cplx(2));
  const CMatrix d = direct_sum({a, a});
  CHECK(d.rows() == 4);
  CHECK(d(3, 3) == cplx(4));
  CHECK(d(0, 3) == cplx(0));
  CHECK(commutator(a, a).max_abs() == 0.0);
}
