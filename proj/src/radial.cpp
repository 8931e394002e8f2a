#include "lorentz/radial.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace lorentz {

namespace {

const cplx I{0, 1};

double checked_sqrt(double v, const char* what) {
  if (v < -1e-12) throw std::domain_error(std::string("assemble_rfs: negative product under ") + what);
  return std::sqrt(std::max(0.0, v));
}

RadialBlock assemble_block(const RepChain& chain, const CoeffTable& table, HalfInt l_top, HalfInt ladder_weight,
                           cplx kappa, SignReading signs, bool dotted) {
  RadialBlock b;
  b.kappa = kappa;
  b.dotted = dotted;
  for (int k = 1; k <= chain.size(); ++k)
    for (HalfInt l : rotation_content(chain.rep(k))) {
      if (l > l_top)
        throw std::domain_error("assemble_rfs: spin " + l.str() + " of member " + std::to_string(k) +
                                " exceeds the ansatz weight " + l_top.str());
      for (HalfInt m : projections(l)) b.unknowns.push_back({l, m, HalfInt(0), HalfInt(0), k - 1});
    }
  const auto n = static_cast<Eigen::Index>(b.unknowns.size());
  b.d = MatrixXc::Zero(n, n);
  b.r = MatrixXc::Zero(n, n);
  const double s1 = signs == SignReading::printed ? -1.0 : 1.0;
  const double s3 = -s1;
  const double w0 = ladder_weight.value();

  for (Eigen::Index row = 0; row < n; ++row) {
    const BasisIndex& eq = b.unknowns[static_cast<std::size_t>(row)];
    const double l = eq.l.value(), m = eq.m.value();
    const double lower = checked_sqrt((w0 + m) * (w0 - m + 1), "the lowering ladder factor");
    const double raise = checked_sqrt((w0 + m + 1) * (w0 - m), "the raising ladder factor");
    auto add = [&](MatrixXc& target, HalfInt lu, HalfInt mu, int k, cplx v) {
      if (v == 0.0) return;
      const Eigen::Index col = b.index_of({lu, mu, HalfInt(0), HalfInt(0), k - 1});
      target(row, col) += v;
    };
    for (const auto& c : table) {
      if (c.to != eq.block + 1 || c.lp != eq.l) continue;
      const int kp = c.from;
      const HalfInt lu = c.l;
      const HalfInt mm = eq.m - HalfInt(1), mp = eq.m + HalfInt(1);
      if (lu == eq.l - HalfInt(1)) {
        const double root = checked_sqrt(l * l - m * m, "l^2 - m^2");
        add(b.d, lu, eq.m, kp, c.value * 2.0 * root);
        add(b.r, lu, eq.m, kp, c.value * s1 * (l + 1) * root);
        add(b.r, lu, mm, kp, c.value * I * checked_sqrt((l + m) * (l + m - 1), "(l+m)(l+m-1)") * lower);
        add(b.r, lu, mp, kp, c.value * I * checked_sqrt((l - m) * (l - m - 1), "(l-m)(l-m-1)") * raise);
      } else if (lu == eq.l) {
        add(b.d, lu, eq.m, kp, c.value * 2.0 * m);
        add(b.r, lu, eq.m, kp, -c.value * m);
        add(b.r, lu, mm, kp, -c.value * I * checked_sqrt((l + m) * (l - m + 1), "(l+m)(l-m+1)") * lower);
        add(b.r, lu, mp, kp, c.value * I * checked_sqrt((l + m + 1) * (l - m), "(l+m+1)(l-m)") * raise);
      } else {
        const double root = checked_sqrt((l + 1) * (l + 1) - m * m, "(l+1)^2 - m^2");
        add(b.d, lu, eq.m, kp, c.value * 2.0 * root);
        add(b.r, lu, eq.m, kp, c.value * s3 * l * root);
        add(b.r, lu, mm, kp, -c.value * I * checked_sqrt((l - m + 1) * (l - m + 2), "(l-m+1)(l-m+2)") * lower);
        add(b.r, lu, mp, kp, -c.value * I * checked_sqrt((l + m + 1) * (l + m + 2), "(l+m+1)(l+m+2)") * raise);
      }
    }
  }
  return b;
}

// f' = (a / r + c) f with a = -D^{-1} R and c = -kappa D^{-1}.
struct Rhs {
  MatrixXc a, c;
  explicit Rhs(const RadialBlock& b) {
    Eigen::FullPivLU<MatrixXc> lu(b.d);
    if (b.d.rows() == 0 || !lu.isInvertible())
      throw std::domain_error("radial system: the derivative coefficient matrix is singular");
    a = -lu.solve(b.r);
    c = -b.kappa * lu.inverse();
  }
  VectorXc operator()(double r, const VectorXc& f) const { return a * f / r + c * f; }
};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;

struct Step {
  VectorXc y, err;
};

Step dp_step(const Rhs& f, double r, const VectorXc& y, double h) {
  const VectorXc k1 = f(r, y);
  const VectorXc k2 = f(r + c2 * h, y + h * (a21 * k1));
  const VectorXc k3 = f(r + c3 * h, y + h * (a31 * k1 + a32 * k2));
  const VectorXc k4 = f(r + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const VectorXc k5 = f(r + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const VectorXc k6 = f(r + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
  const VectorXc y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  const VectorXc k7 = f(r + h, y5);
  return {y5, h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7)};
}

void check_range(double r0, double r1, int steps, int min_steps) {
  if (!(r0 > 0)) throw std::domain_error("integrate: r0 must be positive");
  if (!(r1 > r0)) throw std::domain_error("integrate: r1 must exceed r0");
  if (steps < min_steps) throw std::domain_error("integrate: at least " + std::to_string(min_steps) + " steps required");
}

RadialSolution start(const RadialBlock& block, const VectorXc& init, int steps) {
  if (init.size() != static_cast<Eigen::Index>(block.unknowns.size()))
    throw std::invalid_argument("integrate: initial vector has " + std::to_string(init.size()) + " entries, expected " +
                                std::to_string(block.unknowns.size()));
  RadialSolution sol;
  sol.unknowns = block.unknowns;
  sol.grid.reserve(static_cast<std::size_t>(steps) + 1);
  sol.values.reserve(static_cast<std::size_t>(steps) + 1);
  return sol;
}

double grid_point(double r0, double r1, int i, int steps) {
  return i == steps ? r1 : r0 + (r1 - r0) * static_cast<double>(i) / steps;
}

// Central fourth-order derivative at grid points 2 .. n-3.
std::vector<VectorXc> fd_derivative(const RadialSolution& sol) {
  const std::size_t n = sol.grid.size();
  if (n < 5) throw std::domain_error("residual: at least 5 grid points required");
  const double h = (sol.grid.back() - sol.grid.front()) / static_cast<double>(n - 1);
  const auto& f = sol.values;
  std::vector<VectorXc> d;
  d.reserve(n - 4);
  for (std::size_t i = 2; i + 2 < n; ++i) d.push_back((f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12 * h));
  return d;
}

}  // namespace

Eigen::Index RadialBlock::index_of(const BasisIndex& b) const {
  const auto it = std::find(unknowns.begin(), unknowns.end(), b);
  if (it == unknowns.end()) throw std::out_of_range("radial unknown " + b.str() + " does not exist");
  return it - unknowns.begin();
}

RadialSystem assemble_rfs(const GYSystem& sys, HalfInt l0, HalfInt l0_dot, SignReading signs) {
  RadialSystem rs;
  rs.l0 = l0;
  rs.l0_dot = l0_dot;
  rs.signs = signs;
  validate_coefficients(sys.chain, sys.coeffs);
  validate_coefficients(sys.chain, sys.coeffs_dot);
  rs.undotted = assemble_block(sys.chain, sys.coeffs, l0, l0_dot, sys.kappa, signs, false);
  rs.dotted = assemble_block(sys.chain, sys.coeffs_dot, l0_dot, l0, sys.kappa_dot, signs, true);
  return rs;
}

RadialSolution integrate(const RadialBlock& block, double r0, double r1, const VectorXc& init, int steps, double tol) {
  check_range(r0, r1, steps, 100);
  const Rhs f(block);
  RadialSolution sol = start(block, init, steps);
  VectorXc y = init;
  double r = r0;
  double h = (r1 - r0) / steps;
  sol.grid.push_back(r0);
  sol.values.push_back(y);
  for (int i = 1; i <= steps; ++i) {
    const double target = grid_point(r0, r1, i, steps);
    while (r < target) {
      // Slivers shorter than a percent of h are merged into the final step.
      const bool last = r + 1.01 * h >= target;
      const double step = last ? target - r : h;
      if (h < 1e-14 * std::max(1.0, r))
        throw IntegrationError("integrate: step size underflow at r = " + std::to_string(r), r);
      const Step s = dp_step(f, r, y, step);
      double err = 0;
      for (Eigen::Index j = 0; j < y.size(); ++j)
        err = std::max(err, std::abs(s.err(j)) / (tol + tol * std::max(std::abs(y(j)), std::abs(s.y(j)))));
      if (!std::isfinite(err))
        throw IntegrationError("integrate: non-finite state at r = " + std::to_string(r), r);
      const double factor = err == 0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      if (err <= 1.0) {
        r = last ? target : r + step;
        y = s.y;
        if (!last) h = step * factor;
      } else {
        h = step * factor;
      }
    }
    sol.grid.push_back(target);
    sol.values.push_back(y);
  }
  return sol;
}

RadialSolution integrate_fixed(const RadialBlock& block, double r0, double r1, const VectorXc& init, int steps) {
  check_range(r0, r1, steps, 1);
  const Rhs f(block);
  RadialSolution sol = start(block, init, steps);
  VectorXc y = init;
  sol.grid.push_back(r0);
  sol.values.push_back(y);
  for (int i = 1; i <= steps; ++i) {
    const double a = grid_point(r0, r1, i - 1, steps), b = grid_point(r0, r1, i, steps);
    y = dp_step(f, a, y, b - a).y;
    sol.grid.push_back(b);
    sol.values.push_back(y);
  }
  return sol;
}

std::vector<double> residual_profile(const RadialBlock& block, const RadialSolution& sol) {
  const auto d = fd_derivative(sol);
  std::vector<double> out(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    const std::size_t i = j + 2;
    const VectorXc lhs = block.d * d[j] + (block.r / sol.grid[i]) * sol.values[i] + block.kappa * sol.values[i];
    out[j] = lhs.cwiseAbs().maxCoeff();
  }
  return out;
}

double residual(const RadialBlock& block, const RadialSolution& sol) {
  const auto p = residual_profile(block, sol);
  return *std::max_element(p.begin(), p.end());
}

double observed_order(const RadialBlock& block, double r0, double r1, const VectorXc& init, int steps) {
  const VectorXc y1 = integrate_fixed(block, r0, r1, init, steps).values.back();
  const VectorXc y2 = integrate_fixed(block, r0, r1, init, 2 * steps).values.back();
  const VectorXc y4 = integrate_fixed(block, r0, r1, init, 4 * steps).values.back();
  return std::log2((y1 - y2).norm() / (y2 - y4).norm());
}

std::string to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::pass: return "pass";
    case ProbeStatus::fail: return "fail";
    case ProbeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

BesselProbeReport bessel_probe(const std::vector<double>& grid, const std::vector<double>& x, double exponent_tol) {
  if (grid.size() != x.size() || grid.size() < 3) throw std::invalid_argument("bessel_probe: bad sample arrays");
  BesselProbeReport rep;
  std::vector<double> zeros;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if ((x[i] > 0 && x[i + 1] <= 0) || (x[i] < 0 && x[i + 1] >= 0))
      zeros.push_back(grid[i] + (grid[i + 1] - grid[i]) * x[i] / (x[i] - x[i + 1]));
  rep.zero_crossings = static_cast<int>(zeros.size());
  rep.periods = zeros.size() / 2.0;
  if (zeros.empty()) {
    rep.status = ProbeStatus::fail;
    rep.note = "no oscillation";
    return rep;
  }
  if (zeros.size() < 6) {
    rep.note = "fewer than 3 oscillation periods";
    return rep;
  }
  // One peak between each pair of crossings, refined by a parabola.
  std::vector<double> lr, la;
  std::size_t i = 0;
  for (std::size_t z = 0; z + 1 < zeros.size(); ++z) {
    while (i < grid.size() && grid[i] < zeros[z]) ++i;
    std::size_t best = i;
    for (std::size_t j = i; j < grid.size() && grid[j] < zeros[z + 1]; ++j)
      if (std::abs(x[j]) > std::abs(x[best])) best = j;
    double rp = grid[best], ap = std::abs(x[best]);
    if (best > 0 && best + 1 < grid.size()) {
      const double ym = std::abs(x[best - 1]), y0 = ap, yp = std::abs(x[best + 1]);
      const double den = ym - 2 * y0 + yp;
      if (den < 0) {
        const double t = 0.5 * (ym - yp) / den;
        rp += t * (grid[best + 1] - grid[best]);
        ap = y0 - 0.25 * (ym - yp) * t;
      }
    }
    if (ap > 0) {
      lr.push_back(std::log(rp));
      la.push_back(std::log(ap));
    }
  }
  const double n = static_cast<double>(lr.size());
  const double mx = std::accumulate(lr.begin(), lr.end(), 0.0) / n, my = std::accumulate(la.begin(), la.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < lr.size(); ++k) {
    sxy += (lr[k] - mx) * (la[k] - my);
    sxx += (lr[k] - mx) * (lr[k] - mx);
  }
  rep.envelope_exponent = sxy / sxx;
  const std::size_t half = (zeros.size() - 1) / 2;
  auto mean_gap = [&](std::size_t from, std::size_t to) {
    return (zeros[to] - zeros[from]) / static_cast<double>(to - from);
  };
  const double early = mean_gap(0, half), late = mean_gap(half, zeros.size() - 1);
  rep.wavelength = 2 * late;
  rep.wavelength_drift = std::abs(late - early) / late;
  const bool envelope_ok = std::abs(rep.envelope_exponent + 0.5) <= exponent_tol;
  const bool wavelength_ok = rep.wavelength_drift <= 0.1;
  rep.status = envelope_ok && wavelength_ok ? ProbeStatus::pass : ProbeStatus::fail;
  if (!envelope_ok) rep.note = "envelope exponent outside -1/2 +- " + std::to_string(exponent_tol);
  if (!wavelength_ok) rep.note += std::string(rep.note.empty() ? "" : "; ") + "wavelength not settled";
  return rep;
}

BesselProbeReport bessel_probe(const RadialSolution& sol, double exponent_tol) {
  if (sol.values.empty()) throw std::invalid_argument("bessel_probe: empty solution");
  const auto n = sol.values.front().size();
  Eigen::Index comp = 0;
  double best = -1;
  for (Eigen::Index c = 0; c < n; ++c) {
    double m = 0;
    for (const auto& v : sol.values) m = std::max(m, std::abs(v(c)));
    if (m > best) {
      best = m;
      comp = c;
    }
  }
  std::vector<double> samples;
  samples.reserve(sol.values.size());
  for (const auto& v : sol.values) samples.push_back(v(comp).real());
  BesselProbeReport rep = bessel_probe(sol.grid, samples, exponent_tol);
  rep.component = comp;
  return rep;
}

}  // namespace lorentz
