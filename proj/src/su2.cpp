#include "lorentz/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace {

void check_key(HalfInt l, HalfInt m, HalfInt n) {
  if (l.twice() < 0 || abs(m) > l || abs(n) > l || !(l - m).is_integer() || !(l - n).is_integer())
    throw std::domain_error("invalid matrix-element key l=" + l.str() + " m=" + m.str() + " n=" + n.str());
}

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

double ipow(double x, int k) { return k == 0 ? 1.0 : std::pow(x, k); }

struct Params {
  int a, b, d;
  double norm;
};

// a = l - max(m,n), b = l + min(m,n), d = |m-n|; a + b + d = 2l.
Params params(HalfInt l, HalfInt m, HalfInt n) {
  Params p{};
  HalfInt hi = m > n ? m : n, lo = m > n ? n : m;
  p.a = (l - hi).as_int();
  p.b = (l + lo).as_int();
  p.d = (hi - lo).as_int();
  p.norm = std::exp(0.5 * (ln_factorial((l - m).as_int()) + ln_factorial((l + m).as_int()) +
                           ln_factorial((l - n).as_int()) + ln_factorial((l + n).as_int())) -
                    ln_factorial(p.a) - ln_factorial(p.b) - ln_factorial(p.d));
  return p;
}

}  // namespace

cplx sph_p(HalfInt l, HalfInt m, HalfInt n, double theta) {
  check_key(l, m, n);
  const Params p = params(l, m, n);
  const int two_l = l.twice();
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  cplx series;
  if (std::abs(s) <= std::abs(c)) {
    const double t = s / c;
    series = ipow(c, two_l - p.d) * ipow(s, p.d) * hyp2f1_term(-p.a, -p.b, p.d + 1, -t * t);
  } else {
    // Same polynomial summed from its top term, in powers of cot^2.
    const double ct = c / s;
    const int a = std::min(p.a, p.b), b = std::max(p.a, p.b), top = a;
    const double lead = std::exp(ln_factorial(p.a) + ln_factorial(p.b) + ln_factorial(p.d) -
                                 ln_factorial(top) - ln_factorial(p.a - top) - ln_factorial(p.b - top) -
                                 ln_factorial(p.d + top));
    const double sign = (top % 2) ? -1.0 : 1.0;
    series = sign * lead * ipow(c, two_l - p.d - 2 * top) * ipow(s, p.d + 2 * top) *
             hyp2f1_term(-a, -a - p.d, b - a + 1, -ct * ct);
  }
  return p.norm * i_pow(p.d) * series;
}

double jac_p(HalfInt l, HalfInt m, HalfInt n, double tau) {
  check_key(l, m, n);
  const Params p = params(l, m, n);
  const double ch = std::cosh(tau / 2), sh = std::sinh(tau / 2), th = std::tanh(tau / 2);
  cplx f = hyp2f1_term(-p.a, -p.b, p.d + 1, th * th);
  return p.norm * ipow(ch, l.twice() - p.d) * ipow(sh, p.d) * f.real();
}

double wigner_d(HalfInt l, HalfInt m, HalfInt n, double beta) {
  check_key(l, m, n);
  const int jpm = (l + m).as_int(), jmm = (l - m).as_int(), jpn = (l + n).as_int(), jmn = (l - n).as_int();
  const int mn = (m - n).as_int();
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  const double pref = 0.5 * (ln_factorial(jpm) + ln_factorial(jmm) + ln_factorial(jpn) + ln_factorial(jmn));
  CompensatedSum<double> sum;
  for (int k = std::max(0, -mn); k <= std::min(jpn, jmm); ++k) {
    double mag = std::exp(pref - ln_factorial(jpn - k) - ln_factorial(k) - ln_factorial(mn + k) -
                          ln_factorial(jmm - k));
    double sign = ((mn + k) % 2) ? -1.0 : 1.0;
    sum.add(sign * mag * ipow(c, jpn + jmm - 2 * k) * ipow(s, mn + 2 * k));
  }
  return sum.value();
}

bool cg_allowed(const CGKeySU2& k) {
  if (k.l1.twice() < 0 || k.l2.twice() < 0 || k.l.twice() < 0) return false;
  if (k.m != k.j + k.k) return false;
  if (abs(k.j) > k.l1 || abs(k.k) > k.l2 || abs(k.m) > k.l) return false;
  if (k.l < abs(k.l1 - k.l2) || k.l > k.l1 + k.l2) return false;
  if (!(k.l1 + k.l2 + k.l).is_integer()) return false;
  return (k.l1 - k.j).is_integer() && (k.l2 - k.k).is_integer() && (k.l - k.m).is_integer();
}

double cg_su2(const CGKeySU2& key) {
  if (!cg_allowed(key)) return 0.0;
  const int l1_l2_l = (key.l1 + key.l2 - key.l).as_int();
  const int l1_j = (key.l1 - key.j).as_int();
  const int l2_k = (key.l2 + key.k).as_int();
  const int l_l2_j = (key.l - key.l2 + key.j).as_int();
  const int l_l1_k = (key.l - key.l1 - key.k).as_int();
  const double pref =
      0.5 * (std::log(key.l.twice() + 1.0) + ln_factorial(l1_l2_l) + ln_factorial((key.l1 - key.l2 + key.l).as_int()) +
             ln_factorial((key.l2 - key.l1 + key.l).as_int()) - ln_factorial((key.l1 + key.l2 + key.l).as_int() + 1) +
             ln_factorial((key.l1 + key.j).as_int()) + ln_factorial(l1_j) + ln_factorial(l2_k) +
             ln_factorial((key.l2 - key.k).as_int()) + ln_factorial((key.l + key.m).as_int()) +
             ln_factorial((key.l - key.m).as_int()));
  CompensatedSum<double> sum;
  const int zmin = std::max({0, -l_l2_j, -l_l1_k});
  const int zmax = std::min({l1_l2_l, l1_j, l2_k});
  for (int z = zmin; z <= zmax; ++z) {
    double mag = std::exp(pref - ln_factorial(z) - ln_factorial(l1_l2_l - z) - ln_factorial(l1_j - z) -
                          ln_factorial(l2_k - z) - ln_factorial(l_l2_j + z) - ln_factorial(l_l1_k + z));
    sum.add((z % 2) ? -mag : mag);
  }
  return sum.value();
}

double cg_su2_3f2(const CGKeySU2& key) {
  if (!cg_allowed(key)) return 0.0;
  const HalfInt l1 = key.l1, l2 = key.l2, l = key.l, j = key.j, k = key.k, m = key.m;
  const double sign = ((l1 - j).as_int() % 2) ? -1.0 : 1.0;
  const double root = std::exp(
      0.5 * (ln_factorial((l - m).as_int()) + ln_factorial((l + l2 - l1).as_int()) + ln_factorial((l1 - j).as_int()) +
             ln_factorial((l2 + k).as_int()) + ln_factorial((l + m).as_int()) + std::log(l.twice() + 1.0) -
             ln_factorial((l1 - l2 + l).as_int()) - ln_factorial((l1 + l2 - l).as_int()) -
             ln_factorial((l1 + l2 + l).as_int()) - ln_factorial((l1 - j).as_int()) - ln_factorial((l2 - k).as_int())));
  const double gamma_top = factorial((l1 + l2 - m).as_int());

  // Upper parameters l+m+1, -l+m, -l1+j; lower -l1-l2+m and b2 = l2-l1+m+1.
  const double a1 = (l + m).value() + 1, a2 = (m - l).value(), a3 = (j - l1).value();
  const double b1 = (m - l1 - l2).value();
  const int b2 = (l2 - l1 + m).as_int() + 1;
  const int terms = std::min((l - m).as_int(), (l1 - j).as_int());
  CompensatedSum<double> sum;
  double poch = 1.0;  // (a1)_n (a2)_n (a3)_n / ((b1)_n n!)
  for (int n = 0; n <= terms; ++n) {
    sum.add(poch * inv_gamma_int(b2 + n));
    if (n == terms) break;
    if (b1 + n == 0.0) throw std::domain_error("cg_su2_3f2: lower parameter pole before termination");
    poch *= (a1 + n) * (a2 + n) * (a3 + n) / ((b1 + n) * (n + 1.0));
  }
  return sign * gamma_top * root * sum.value();
}

}  // namespace lorentz
