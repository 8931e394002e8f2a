#include "doctest.h"
#include "lorentz/clifford.hpp"

using namespace lorentz;

namespace {
MatrixXc sigma(int which) {
  MatrixXc s = MatrixXc::Zero(2, 2);
  switch (which) {
    case 0: s = MatrixXc::Identity(2, 2); break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: s << 1, 0, 0, -1;
  }
  return s;
}
MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc o(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) o.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return o;
}
}  // namespace

TEST_CASE("Pauli strings agree with dense Kronecker products") {
  const std::vector<std::vector<int>> words = {{1}, {2}, {3, 1}, {2, 2}, {0, 2, 3}, {1, 3, 2}};
  for (const auto& w : words) {
    MatrixXc dense = sigma(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) dense = kron(dense, sigma(w[i]));
    CHECK((PauliString::from_factors(w).dense() - dense).norm() == 0.0);
    for (const auto& v : words) {
      if (v.size() != w.size()) continue;
      const PauliString p = PauliString::from_factors(w) * PauliString::from_factors(v);
      CHECK((p.dense() - PauliString::from_factors(w).dense() * PauliString::from_factors(v).dense()).norm() == 0.0);
    }
  }
  CHECK((PauliString::from_factors({2}).prepend(3).dense() - kron(sigma(3), sigma(2))).norm() == 0.0);
}

TEST_CASE("Brauer-Weyl generators anticommute exactly") {
  for (int n = 1; n <= 10; ++n) {
    const CliffordBasis b = brauer_weyl(n);
    CHECK(static_cast<int>(b.generators.size()) == n);
    CHECK(b.matrix_size() == (1 << ((n + 1) / 2)));
    const CliffordReport r = verify_clifford(b);
    CHECK(r.passed);
    CHECK(r.span_dimensions == r.expected_span);
  }
}

TEST_CASE("dense anticommutators for small n") {
  const CliffordBasis b = brauer_weyl(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const MatrixXc a = b.generators[i].dense(), c = b.generators[j].dense();
      const MatrixXc expect = (i == j ? 2.0 : 0.0) * MatrixXc::Identity(4, 4);
      CHECK((a * c + c * a - expect).norm() == 0.0);
    }
}

TEST_CASE("a corrupted generator is reported with its pair") {
  CliffordBasis b = brauer_weyl(5);
  b.generators[2] = b.generators[1];
  const CliffordReport r = verify_clifford(b);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.front() == std::make_pair(2, 3));
}

TEST_CASE("odd direct sum splits into two inequivalent summands") {
  for (int m = 1; m <= 3; ++m) {
    const OddDirectSumReport r = odd_direct_sum(m, 50, 99);
    CHECK(r.passed);
    CHECK(r.volume_central);
    CHECK(r.summands_commute);
    REQUIRE(r.volume_scalars.size() == 2);
    CHECK(std::abs(r.volume_scalars[0] + r.volume_scalars[1]) == 0.0);
  }
}

TEST_CASE("Schur transpositions realize -1 on far commutation") {
  for (int m = 4; m <= 8; ++m) {
    const SchurReport r = verify_tn_relations(schur_transpositions(m));
    CHECK(r.scalar_classes);
    REQUIRE(r.s3.has_value());
    CHECK(std::abs(*r.s3 + 1.0) < 1e-12);
    CHECK(r.unitary_traceless);
  }
  CHECK_THROWS(schur_transpositions(1));
  CHECK_THROWS(schur_transpositions(11));
}
