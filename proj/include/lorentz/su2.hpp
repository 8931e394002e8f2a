#pragma once

#include "lorentz/half_int.hpp"
#include "lorentz/special.hpp"

namespace lorentz {

// Key for C(l1, l2, l; j, k, m).
struct CGKeySU2 {
  HalfInt l1, l2, l, j, k, m;
};

// P^l_mn(cos theta): SU(2) matrix element carrying the i^{m-n} phase.
cplx sph_p(HalfInt l, HalfInt m, HalfInt n, double theta);

// Jacobi function of the boost subgroup, P^l_mn(cosh tau).
double jac_p(HalfInt l, HalfInt m, HalfInt n, double tau);

// Real Wigner d^l_mn(beta) in the Condon-Shortley convention.
// sph_p(l, m, n, theta) == i^{m-n} * wigner_d(l, m, n, -theta).
double wigner_d(HalfInt l, HalfInt m, HalfInt n, double beta);

// Clebsch-Gordan coefficient (Condon-Shortley), Racah closed-form sum.
// Keys violating the selection rules give exactly 0.
double cg_su2(const CGKeySU2& key);

// One SU(2) factor of the closed 3F2 form of SL(2,C) coupling coefficients:
//   (-1)^{l1-j} Gamma(l1+l2-m+1)/Gamma(l2-l1+m+1)
//   * sqrt[(l-m)!(l+l2-l1)!(l1-j)!(l2+k)!(l+m)!(2l+1)
//          / ((l1-l2+l)!(l1+l2-l)!(l1+l2+l)!(l1-j)!(l2-k)!)]
//   * 3F2(l+m+1, -l+m, -l1+j; -l1-l2+m, l2-l1+m+1; 1)
// taken term by term. 1/Gamma(l2-l1+m+1) is merged into the series, so a pole
// of that Gamma is read as its regularized limit. Returns 0 off the selection rules.
// This is not normalized like cg_su2; compare ratios.
double cg_su2_3f2(const CGKeySU2& key);

// True when the key satisfies the triangle and projection rules.
bool cg_allowed(const CGKeySU2& key);

}  // namespace lorentz
