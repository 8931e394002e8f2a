#include "doctest.h"
#include "lorentz/generators.hpp"

using namespace lorentz;
using K = OperatorKind;

TEST_CASE("operator names round trip") {
  for (K k : all_operator_kinds()) CHECK(parse_operator_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_operator_kind("Q7"), std::invalid_argument);
}

TEST_CASE("Waerden ladders act on the right index") {
  const OperatorSet w = waerden_set(HalfInt(1), kHalf);
  const CMatrix& y3 = w.at(K::Y3);
  const CMatrix& x3 = w.at(K::X3);
  for (Eigen::Index i = 0; i < y3.rows(); ++i) {
    CHECK(y3(i, i).real() == y3.row_basis()[static_cast<std::size_t>(i)].m.value());
    CHECK(x3(i, i).real() == x3.row_basis()[static_cast<std::size_t>(i)].mdot.value());
  }
  CHECK(max_abs_diff(w.at(K::Yp).adjoint(), w.at(K::Ym)) == 0.0);
  CHECK_THROWS_AS(w.at(K::H3), std::out_of_range);
}

TEST_CASE("commutator tables hold for every realization family") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const OperatorSet w = waerden_set(HalfInt::halves(a), HalfInt::halves(b));
      CHECK(commutator_residual(anti_hermitian_from_waerden(w), RelationSet::Com1) < 1e-12);
      CHECK(commutator_residual(w, RelationSet::Com2) < 1e-12);
      CHECK(commutator_residual(w, RelationSet::WaerdenConsistency) < 1e-12);
    }
  for (int t = 0; t <= 4; ++t) CHECK(commutator_residual(helicity_set(HalfInt::halves(t)), RelationSet::Com1) < 1e-12);
  for (int p = 1; p <= 2; ++p) {
    const OperatorSet xy = basis_change(gn_set({kHalf, p}));
    CHECK(commutator_residual(xy, RelationSet::Com1) < 1e-12);
    CHECK(commutator_residual(xy, RelationSet::Com2) < 1e-12);
  }
}

TEST_CASE("the Lorentz table has 15 distinct brackets") {
  const auto r = commutator_report(helicity_set(HalfInt(1)), RelationSet::Com1);
  CHECK(r.relations.size() == 15);
}

TEST_CASE("literal tilde operators reverse every bracket") {
  const OperatorSet t = helicity_tilde_set(HalfInt(1));
  const OperatorSet h = helicity_set(HalfInt(1));
  CHECK(max_abs_diff(t.at(K::At1), -h.at(K::A1)) == 0.0);
  CHECK(commutator_residual(t, RelationSet::Com1Tilde) > 0.5);
}

TEST_CASE("the transposed Com2 variant is rejected") {
  CHECK(commutator_residual(waerden_set(HalfInt(1), HalfInt(1)), RelationSet::Com2TransposedVariant) > 0.5);
}

TEST_CASE("a corrupted generator is detected") {
  OperatorSet w = anti_hermitian_from_waerden(waerden_set(HalfInt(1), kHalf));
  CHECK(commutator_residual(w, RelationSet::Com1) < 1e-12);
  w.ops.at(K::A1)(0, 1) += 1e-6;
  CHECK(commutator_residual(w, RelationSet::Com1) > 1e-7);
}

TEST_CASE("GN basis change round trip and the trivial representation") {
  const OperatorSet g = gn_set({HalfInt(0), 1});
  CHECK(gn_basis({HalfInt(0), 1}).size() == 1);
  const OperatorSet back = basis_change_inverse(basis_change(g));
  for (K k : {K::H3, K::F3, K::Hp, K::Fm}) CHECK(max_abs_diff(back.at(k), g.at(k)) < 1e-14);
  for (const auto& [k, m] : g.ops) CHECK(m.max_abs() == 0.0);
}

TEST_CASE("helicity quadruples realize a single factor") {
  const OperatorSet h = helicity_set(HalfInt::halves(3));
  const OperatorSet t = helicity_tilde_set(HalfInt::halves(3));
  const cplx i(0, 1);
  for (auto [a, b, at, bt] : {std::tuple{K::A1, K::B1, K::At1, K::Bt1}, std::tuple{K::A2, K::B2, K::At2, K::Bt2},
                              std::tuple{K::A3, K::B3, K::At3, K::Bt3}}) {
    CHECK((cplx(0.5) * (h.at(a) + i * h.at(b))).max_abs() < 1e-15);
    CHECK((cplx(0.5) * (t.at(at) + i * t.at(bt))).max_abs() < 1e-15);
    CHECK((cplx(0.5) * (t.at(at) - i * t.at(bt))).max_abs() > 0.1);
  }
}
