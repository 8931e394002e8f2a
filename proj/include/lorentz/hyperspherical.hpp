#pragma once

#include "lorentz/cmatrix.hpp"
#include "lorentz/half_int.hpp"

namespace lorentz {

struct HypersphericalKey {
  HalfInt l, m, n;
};

// Z^l_mn(theta, tau) from the explicit double sum over k and the two inner
// finite sums, written with non-negative powers of cos/sin and cosh/sinh.
cplx z_series(const HypersphericalKey& key, double theta, double tau);

// Z^l_mn = sum_k sph_p(l, m, k, theta) * jac_p(l, k, n, tau).
cplx z_factorized(const HypersphericalKey& key, double theta, double tau);

// e^{-m(eps + i phi)} Z^l_mn e^{-n(veps + i psi)}.
cplx m_function(const HypersphericalKey& key, const GroupPoint& g);

// Explicit 2x2 complexified SU(2) matrix. Row/column 0 carries m = -1/2,
// row/column 1 carries m = +1/2 (labels (1/2, m; 0, 0)).
CMatrix fundamental_matrix(const GroupPoint& g);

// Product of the six diagonal / rotation / boost factors, same labels.
CMatrix euler_product(const GroupPoint& g);

// Representation (l, ldot): M^l(g) (x) M^ldot(g') with g' the point having
// eps, tau, veps negated, i.e. (g^dagger)^{-1}. Labels enumerate_basis(l, ldot).
CMatrix rep_matrix(HalfInt l, HalfInt ldot, const GroupPoint& g);

// [Z^l_mn(theta, tau)] over m, n descending, labels (l, m; 0, 0).
CMatrix z_matrix(HalfInt l, double theta, double tau);

}  // namespace lorentz
