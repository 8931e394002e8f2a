#include <cmath>

#include "doctest.h"
#include "lorentz/chain_io.hpp"
#include "lorentz/radial.hpp"

using namespace lorentz;

namespace {
GYSystem dirac(cplx kappa = {0, 1}, double scale = 1.0) {
  ChainConfig cfg = dirac_preset();
  for (auto* t : {&cfg.coeffs, &cfg.coeffs_dot})
    for (auto& c : *t) c.value *= scale;
  return build_gy_system(cfg.chain, cfg.coeffs, cfg.coeffs_dot, kappa, kappa);
}
}  // namespace

TEST_CASE("assembly preconditions") {
  CHECK_THROWS_AS(assemble_rfs(dirac(), HalfInt(0), HalfInt(0)), std::domain_error);
  const RadialSystem rs = assemble_rfs(dirac(), kHalf, kHalf);
  CHECK(rs.undotted.unknowns.size() == 4);
  CHECK(rs.dotted.dotted);
}

TEST_CASE("assembly is linear in the coefficient table") {
  const RadialSystem a = assemble_rfs(dirac(), kHalf, kHalf), b = assemble_rfs(dirac({0, 1}, 2.0), kHalf, kHalf);
  CHECK((b.undotted.d - 2.0 * a.undotted.d).norm() < 1e-15);
  CHECK((b.undotted.r - 2.0 * a.undotted.r).norm() < 1e-15);
}

TEST_CASE("equations couple only neighbouring l and m") {
  const RepChain c{{{kHalf, HalfInt(0)}, {HalfInt(0), kHalf}, {HalfInt(1), kHalf}}};
  const CoeffTable t = random_coeff_table(c, 3);
  const GYSystem sys = build_gy_system(c, t, t, {0, 1}, {0, 1});
  const RadialSystem rs = assemble_rfs(sys, HalfInt::halves(3), HalfInt::halves(3));
  const auto& u = rs.undotted.unknowns;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      if (std::abs(rs.undotted.d(ii, jj)) + std::abs(rs.undotted.r(ii, jj)) == 0.0) continue;
      CHECK(abs(u[i].l - u[j].l) <= HalfInt(1));
      CHECK(abs(u[i].m - u[j].m) <= HalfInt(1));
    }
}

TEST_CASE("the alternative sign reading changes the 1/r terms only") {
  const RepChain c{{{kHalf, HalfInt(0)}, {HalfInt(0), kHalf}, {HalfInt(1), kHalf}}};
  const CoeffTable t = random_coeff_table(c, 5);
  const GYSystem sys = build_gy_system(c, t, t, {0, 1}, {0, 1});
  const RadialSystem p = assemble_rfs(sys, HalfInt::halves(3), HalfInt::halves(3));
  const RadialSystem a = assemble_rfs(sys, HalfInt::halves(3), HalfInt::halves(3), SignReading::alternative);
  CHECK((p.undotted.d - a.undotted.d).norm() == 0.0);
  CHECK((p.undotted.r - a.undotted.r).norm() > 0.0);
}

TEST_CASE("zero data stays zero") {
  const RadialSystem rs = assemble_rfs(dirac(), kHalf, kHalf);
  const RadialSolution s = integrate(rs.undotted, 0.5, 5.0, VectorXc::Zero(4), 200);
  CHECK(s.grid.size() == 201);
  for (const auto& v : s.values) CHECK(v.norm() == 0.0);
  CHECK(residual(rs.undotted, s) == 0.0);
}

TEST_CASE("integration preconditions") {
  const RadialSystem rs = assemble_rfs(dirac(), kHalf, kHalf);
  const VectorXc one = VectorXc::Ones(4);
  CHECK_THROWS(integrate(rs.undotted, 0.0, 5.0, one, 200));
  CHECK_THROWS(integrate(rs.undotted, 1.0, 0.5, one, 200));
  CHECK_THROWS(integrate(rs.undotted, 0.5, 5.0, one, 99));
  CHECK_THROWS(integrate(rs.undotted, 0.5, 5.0, VectorXc::Ones(3), 200));
}

TEST_CASE("Dirac system: residual and convergence order") {
  const RadialSystem rs = assemble_rfs(dirac(), kHalf, kHalf);
  const VectorXc one = VectorXc::Ones(4);
  const RadialSolution s = integrate(rs.undotted, 0.5, 60.0, one, 10000);
  CHECK(s.grid.size() == 10001);
  CHECK(residual(rs.undotted, s) <= 1e-7);
  CHECK(observed_order(rs.undotted, 0.5, 60.0, one, 400) >= 4.0);
  const RadialSolution again = integrate(rs.undotted, 0.5, 60.0, one, 10000);
  CHECK((again.values.back() - s.values.back()).norm() == 0.0);
}

TEST_CASE("a corrupted sample produces a localized residual spike") {
  const RadialSystem rs = assemble_rfs(dirac(), kHalf, kHalf);
  RadialSolution s = integrate(rs.undotted, 0.5, 20.0, VectorXc::Ones(4), 1000);
  s.values[500](1) += 1e-3;
  const auto prof = residual_profile(rs.undotted, s);
  const auto peak = std::max_element(prof.begin(), prof.end()) - prof.begin() + 2;
  CHECK(std::abs(peak - 500) <= 2);
  CHECK(prof[10] < 1e-6);
}

TEST_CASE("Bessel probe oracles") {
  std::vector<double> grid, j0, decay, few;
  for (int i = 0; i <= 10000; ++i) {
    const double r = 0.5 + 59.5 * i / 10000.0;
    grid.push_back(r);
    j0.push_back(std::cyl_bessel_j(0.0, r));
    decay.push_back(std::exp(-r));
    few.push_back(std::sin(r / 8.0));
  }
  const BesselProbeReport ok = bessel_probe(grid, j0);
  CHECK(ok.status == ProbeStatus::pass);
  CHECK(std::abs(ok.envelope_exponent + 0.5) < 0.1);
  CHECK(std::abs(ok.wavelength - 2 * M_PI) < 0.05);
  CHECK(bessel_probe(grid, decay).status == ProbeStatus::fail);
  CHECK(bessel_probe(grid, few).status == ProbeStatus::inconclusive);
}
