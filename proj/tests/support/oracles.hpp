#pragma once

// Independent reference computations used only by the tests.

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "lorentz/half_int.hpp"

namespace oracle {

using MatrixXc = Eigen::MatrixXcd;

// Spin-l angular momentum matrices, m descending.
struct SpinMatrices {
  MatrixXc jp, jm, j3, jx, jy;
};

inline SpinMatrices spin_matrices(lorentz::HalfInt l) {
  const int d = l.twice() + 1;
  const double lv = l.value();
  SpinMatrices s{MatrixXc::Zero(d, d), MatrixXc::Zero(d, d), MatrixXc::Zero(d, d), {}, {}};
  for (int i = 0; i < d; ++i) {
    const double m = lv - i;
    s.j3(i, i) = m;
    if (i > 0) s.jp(i - 1, i) = std::sqrt((lv - m) * (lv + m + 1));
    if (i + 1 < d) s.jm(i + 1, i) = std::sqrt((lv + m) * (lv - m + 1));
  }
  s.jx = (s.jp + s.jm) / 2.0;
  s.jy = (s.jp - s.jm) / std::complex<double>(0, 2);
  return s;
}

// d^l(beta) = exp(-i beta J_y) by the matrix exponential.
inline MatrixXc wigner_d_expm(lorentz::HalfInt l, double beta) {
  const MatrixXc arg = std::complex<double>(0, -beta) * spin_matrices(l).jy;
  return arg.exp();
}

// Average of the m! factor permutations on (C^2)^{(x) m}, most significant factor first.
inline MatrixXc symmetrizer_brute_force(int m) {
  const int dim = 1 << m;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  MatrixXc sum = MatrixXc::Zero(dim, dim);
  int count = 0;
  do {
    for (int x = 0; x < dim; ++x) {
      int y = 0;
      for (int f = 0; f < m; ++f) {
        const int bit = (x >> (m - 1 - f)) & 1;
        y |= bit << (m - 1 - perm[static_cast<std::size_t>(f)]);
      }
      sum(y, x) += 1.0;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / static_cast<double>(count);
}

inline double max_abs(const MatrixXc& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
