#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/gelfand_yaglom.hpp"

namespace lorentz {

// Sign of the 1/r diagonal terms in the first and third bracket groups.
// The printed layout leaves a dangling sign at each line break; `printed`
// takes the sign opening the continuation line, `alternative` flips both.
enum class SignReading { printed, alternative };

// D f' + (R / r) f + kappa f = 0 over the unknowns f_{l m k}.
struct RadialBlock {
  Basis unknowns;  // (l, m; 0, 0), block = k - 1
  MatrixXc d, r;
  cplx kappa;
  bool dotted = false;
  Eigen::Index index_of(const BasisIndex& b) const;
};

struct RadialSystem {
  HalfInt l0, l0_dot;
  SignReading signs = SignReading::printed;
  RadialBlock undotted, dotted;
};

// One equation per (l, m, k) with l in the rotation content of member k.
// Throws std::domain_error when l0 (or l0_dot) is below a chain spin, or a
// ladder factor would take the square root of a negative number.
RadialSystem assemble_rfs(const GYSystem& sys, HalfInt l0, HalfInt l0_dot, SignReading signs = SignReading::printed);

struct RadialSolution {
  std::vector<double> grid;
  std::vector<VectorXc> values;  // one sample per grid point
  Basis unknowns;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double last_radius)
      : std::runtime_error(what), last_radius_(last_radius) {}
  double last_radius() const { return last_radius_; }

 private:
  double last_radius_;
};

// Adaptive Dormand-Prince 5(4) with local tolerance `tol`, sampled on the
// uniform grid of steps + 1 points. Requires r0 > 0, r1 > r0, steps >= 100.
RadialSolution integrate(const RadialBlock& block, double r0, double r1, const VectorXc& init, int steps,
                         double tol = 1e-10);

// Same scheme with `steps` equal fixed steps, for order estimates.
RadialSolution integrate_fixed(const RadialBlock& block, double r0, double r1, const VectorXc& init, int steps);

// Max of |D f' + (R/r + kappa) f| with f' by fourth-order central differences,
// so over grid points 2 .. n-3 of a uniform grid.
double residual(const RadialBlock& block, const RadialSolution& sol);
// Entry j belongs to grid point j + 2.
std::vector<double> residual_profile(const RadialBlock& block, const RadialSolution& sol);

// log2 of successive differences at r1 under step halving (steps, 2 steps, 4 steps).
double observed_order(const RadialBlock& block, double r0, double r1, const VectorXc& init, int steps);

enum class ProbeStatus { pass, fail, inconclusive };
std::string to_string(ProbeStatus s);

struct BesselProbeReport {
  ProbeStatus status = ProbeStatus::inconclusive;
  Eigen::Index component = 0;
  int zero_crossings = 0;
  double periods = 0;
  double envelope_exponent = 0;  // slope of log peak height versus log r
  double wavelength = 0;         // from the later half of the zero crossings
  double wavelength_drift = 0;   // relative change between the two halves
  std::string note;
};

// Envelope ~ r^{-1/2} within `exponent_tol` and a settled wavelength pass.
BesselProbeReport bessel_probe(const RadialSolution& sol, double exponent_tol = 0.1);
// Same on a single real sample sequence.
BesselProbeReport bessel_probe(const std::vector<double>& grid, const std::vector<double>& samples,
                               double exponent_tol = 0.1);

}  // namespace lorentz
