#include "lorentz/hyperspherical.hpp"

#include <cmath>
#include <stdexcept>

#include "lorentz/su2.hpp"

namespace lorentz {

namespace {

const cplx I{0, 1};

void check(const HypersphericalKey& k) {
  if (k.l.twice() < 0 || abs(k.m) > k.l || abs(k.n) > k.l || !(k.l - k.m).is_integer() ||
      !(k.l - k.n).is_integer())
    throw std::domain_error("invalid hyperspherical key");
}

double ipow(double x, int k) { return k == 0 ? 1.0 : std::pow(x, k); }

cplx i_pow(int k) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

// sqrt(G(l-m+1)G(l+m+1)G(l-k+1)G(l+k+1)) * sum_j x^j-weighted terms, with
// cos^{2l} tan^{m-k+2j} folded into c^{2l-(m-k)-2j} s^{m-k+2j}.
// `alternate` selects the (i tan)^{2j} sign pattern of the rotation half.
cplx half_sum(HalfInt l, HalfInt m, HalfInt k, double c, double s, bool alternate) {
  const int lm = (l - m).as_int(), lpm = (l + m).as_int(), lk = (l - k).as_int(), lpk = (l + k).as_int();
  const int mk = (m - k).as_int();
  const double pref = 0.5 * (ln_factorial(lm) + ln_factorial(lpm) + ln_factorial(lk) + ln_factorial(lpk));
  CompensatedSum<double> sum;
  for (int j = std::max(0, -mk); j <= std::min(lm, lpk); ++j) {
    const double w = std::exp(pref - ln_factorial(j) - ln_factorial(lm - j) - ln_factorial(lpk - j) -
                              ln_factorial(mk + j));
    const double sign = (alternate && (j % 2)) ? -1.0 : 1.0;
    sum.add(sign * w * ipow(c, l.twice() - mk - 2 * j) * ipow(s, mk + 2 * j));
  }
  return sum.value();
}

}  // namespace

cplx z_series(const HypersphericalKey& key, double theta, double tau) {
  check(key);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const double ch = std::cosh(tau / 2), sh = std::sinh(tau / 2);
  CompensatedSum<cplx> total;
  for (HalfInt k : projections(key.l)) {
    const cplx rot = i_pow((key.m - k).as_int()) * half_sum(key.l, key.m, k, c, s, true);
    const cplx boost = half_sum(key.l, key.n, k, ch, sh, false);
    total.add(rot * boost);
  }
  return total.value();
}

cplx z_factorized(const HypersphericalKey& key, double theta, double tau) {
  check(key);
  CompensatedSum<cplx> total;
  for (HalfInt k : projections(key.l)) total.add(sph_p(key.l, key.m, k, theta) * jac_p(key.l, k, key.n, tau));
  return total.value();
}

cplx m_function(const HypersphericalKey& key, const GroupPoint& g) {
  const double m = key.m.value(), n = key.n.value();
  return std::exp(-m * cplx(g.eps, g.phi)) * z_factorized(key, g.theta, g.tau) * std::exp(-n * cplx(g.veps, g.psi));
}

namespace {

Basis fundamental_labels() {
  return {{kHalf, -kHalf, HalfInt(0), HalfInt(0), 0}, {kHalf, kHalf, HalfInt(0), HalfInt(0), 0}};
}

CMatrix two_by_two(cplx a, cplx b, cplx c, cplx d) {
  MatrixXc m(2, 2);
  m << a, b, c, d;
  return CMatrix(fundamental_labels(), fundamental_labels(), m);
}

}  // namespace

CMatrix fundamental_matrix(const GroupPoint& g) {
  const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
  const double ch = std::cosh(g.tau / 2), sh = std::sinh(g.tau / 2);
  const cplx diag = c * ch + I * s * sh, off = c * sh + I * s * ch;
  return two_by_two(diag * std::exp(0.5 * cplx(g.eps + g.veps, g.phi + g.psi)),
                    off * std::exp(0.5 * cplx(g.eps - g.veps, g.phi - g.psi)),
                    off * std::exp(0.5 * cplx(g.veps - g.eps, g.psi - g.phi)),
                    diag * std::exp(0.5 * cplx(-g.eps - g.veps, -g.phi - g.psi)));
}

CMatrix euler_product(const GroupPoint& g) {
  auto phase = [](double a) { return two_by_two(std::exp(0.5 * I * a), 0.0, 0.0, std::exp(-0.5 * I * a)); };
  auto scale = [](double a) { return two_by_two(std::exp(0.5 * a), 0.0, 0.0, std::exp(-0.5 * a)); };
  const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
  const double ch = std::cosh(g.tau / 2), sh = std::sinh(g.tau / 2);
  return phase(g.phi) * scale(g.eps) * two_by_two(c, I * s, I * s, c) * two_by_two(ch, sh, sh, ch) * phase(g.psi) *
         scale(g.veps);
}

namespace {

CMatrix m_matrix(HalfInt l, const GroupPoint& g) {
  const Basis basis = enumerate_basis(l, HalfInt(0));
  CMatrix out = CMatrix::zero(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m_function({l, basis[i].m, basis[j].m}, g);
  return out;
}

}  // namespace

CMatrix rep_matrix(HalfInt l, HalfInt ldot, const GroupPoint& g) {
  return kron(m_matrix(l, g), m_matrix(ldot, g.conjugated()));
}

CMatrix z_matrix(HalfInt l, double theta, double tau) {
  const Basis basis = enumerate_basis(l, HalfInt(0));
  CMatrix out = CMatrix::zero(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          z_factorized({l, basis[i].m, basis[j].m}, theta, tau);
  return out;
}

}  // namespace lorentz
