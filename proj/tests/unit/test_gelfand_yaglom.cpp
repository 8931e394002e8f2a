#include "doctest.h"
#include "lorentz/chain_io.hpp"
#include "lorentz/gelfand_yaglom.hpp"

using namespace lorentz;

namespace {
RepChain dirac_chain() { return dirac_preset().chain; }
}  // namespace

TEST_CASE("interlocking and rotation content") {
  CHECK(is_interlocking({kHalf, HalfInt(0)}, {HalfInt(0), kHalf}));
  CHECK_FALSE(is_interlocking({kHalf, HalfInt(0)}, {kHalf, HalfInt(0)}));
  CHECK(rotation_content({HalfInt(1), kHalf}).size() == 2);
  const RepChain c = dirac_chain();
  CHECK(c.dimension() == 4);
  CHECK(c.links() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(c.rotation_basis().size() == 4);
}

TEST_CASE("coefficient validation") {
  const RepChain c = dirac_chain();
  CHECK_NOTHROW(validate_coefficients(c, {{2, 1, kHalf, kHalf, 1.0}}));
  CHECK_THROWS_AS(validate_coefficients(c, {{3, 1, kHalf, kHalf, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_coefficients(c, {{2, 1, HalfInt::halves(3), kHalf, 1.0}}), std::invalid_argument);
  const RepChain two{{{kHalf, HalfInt(0)}, {kHalf, HalfInt(1)}}};
  CHECK_THROWS_AS(validate_coefficients(two, {{2, 1, kHalf, kHalf, 1.0}}), std::invalid_argument);
}

TEST_CASE("rotation-to-helicity change of basis is unitary") {
  const RepChain c{{{HalfInt(1), kHalf}, {kHalf, HalfInt(1)}, {kHalf, kHalf}}};
  const CMatrix u = rotation_to_helicity(c);
  CHECK(max_abs_diff(u * u.adjoint(), CMatrix::identity(u.row_basis())) < 1e-14);
}

TEST_CASE("Dirac Lambda_3 is off-diagonal with entries +-1/2") {
  const ChainConfig cfg = dirac_preset();
  const CMatrix l3 = assemble_lambda3(cfg.chain, cfg.coeffs);
  REQUIRE(l3.rows() == 4);
  CHECK(l3.data().block(0, 0, 2, 2).norm() == 0.0);
  CHECK(l3.data().block(2, 2, 2, 2).norm() == 0.0);
  CHECK(std::abs(l3(0, 2) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(l3(1, 3) - cplx(-0.5)) < 1e-15);
}

TEST_CASE("Dirac system: A-relations, similarity and blocks") {
  const ChainConfig cfg = dirac_preset();
  const GYSystem sys = build_gy_system(cfg.chain, cfg.coeffs, cfg.coeffs_dot, cfg.kappa, cfg.kappa_dot);
  const InvarianceReport r = verify_invariance(sys, chain_generators(cfg.chain));
  CHECK(r.max_residual("AL") < 1e-12);
  CHECK(r.max_residual("DAL") < 1e-12);
  const SimilarityResult s = similarity_to_gamma(sys.lambda);
  CHECK(s.similar(1e-8));
  CHECK(std::abs(std::abs(s.scale) - 0.5) < 1e-12);
  const ProjectionBlocks pb = projection_blocks(sys.lambda[2]);
  CHECK(pb.off_block_max == 0.0);
  CHECK(max_abs_diff(pb.reassemble(sys.lambda[2].row_basis()), sys.lambda[2]) == 0.0);
  const SpinBlock sb = spin_block(cfg.chain, cfg.coeffs, kHalf);
  CHECK(sb.has_nonzero_root());
  for (cplx e : sb.eigenvalues) CHECK(std::abs(std::abs(e) - 1.0) < 1e-14);
  const auto comp = classify(cfg.chain);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0].indecomposable);
}

TEST_CASE("a perturbed Lambda triple is flagged") {
  const ChainConfig cfg = dirac_preset();
  GYSystem sys = build_gy_system(cfg.chain, cfg.coeffs, cfg.coeffs_dot, cfg.kappa, cfg.kappa_dot);
  sys.lambda[1](1, 2) += 1e-6;
  const InvarianceReport r = verify_invariance(sys, chain_generators(cfg.chain));
  CHECK(r.max_residual("AL") > 1e-7);
  CHECK_FALSE(r.violations(1e-12).empty());
}

TEST_CASE("assembly is linear in the coefficients") {
  const RepChain c{{{kHalf, HalfInt(0)}, {HalfInt(0), kHalf}, {HalfInt(1), kHalf}}};
  const CoeffTable a = random_coeff_table(c, 1), b = random_coeff_table(c, 2);
  CoeffTable sum = a;
  for (auto x : b) {
    x.value *= 2.0;
    sum.push_back(x);
  }
  const CMatrix lhs = assemble_lambda3(c, sum);
  const CMatrix rhs = assemble_lambda3(c, a) + cplx(2.0) * assemble_lambda3(c, b);
  CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("classification splits unlinked chains") {
  const RepChain c{{{kHalf, HalfInt(0)}, {HalfInt(0), kHalf}, {HalfInt(1), HalfInt(1)}}};
  const auto comp = classify(c);
  CHECK(comp.size() == 2);
}

TEST_CASE("chain configuration parsing") {
  const ChainConfig c = parse_chain_config(R"({"reps":[{"l1":"1/2","l2":"0"},{"l1":"0","l2":"1/2"}],
    "coeffs":[{"from":1,"to":2,"lp":"1/2","l":"1/2","re":1.0}],"kappa":[0.5,0.0]})");
  CHECK(c.chain.size() == 2);
  CHECK(c.coeffs.size() == 1);
  CHECK(c.coeffs_dot.size() == 1);
  CHECK(c.kappa == cplx(0.5, 0.0));
  CHECK(c.kappa_dot == cplx(0.5, 0.0));
  CHECK_THROWS_AS(parse_chain_config(R"({"reps":[],"coeffs":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain_config("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain_config(R"({"reps":[{"l1":"1/3","l2":"0"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(load_chain_config("/nonexistent/chain.json"), std::invalid_argument);
}
