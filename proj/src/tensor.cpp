#include "lorentz/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace {

std::vector<HalfInt> triangle(HalfInt a, HalfInt b) {
  std::vector<HalfInt> out;
  for (HalfInt x = abs(a - b); x <= a + b; x += HalfInt(1)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<RepLabel> cg_series(const RepLabel& a, const RepLabel& b) {
  std::vector<RepLabel> out;
  for (HalfInt k : triangle(a.l1, b.l1))
    for (HalfInt kp : triangle(a.l2, b.l2)) out.push_back({k, kp});
  return out;
}

double cg_sl2c(const CGKeySL2C& key) { return cg_su2(key.undotted) * cg_su2(key.dotted); }

double cg_sl2c_3f2(const CGKeySL2C& key) { return cg_su2_3f2(key.undotted) * cg_su2_3f2(key.dotted); }

bool CGConversion::constant(double tol) const {
  return zero_mismatches == 0 && !entries.empty() && max_ratio - min_ratio <= tol * std::max(1.0, std::abs(max_ratio));
}

CGConversion cg_conversion(HalfInt l1, HalfInt l2, HalfInt l) {
  CGConversion out{l1, l2, l, {}, 0, 0, 0};
  bool first = true;
  for (HalfInt j : projections(l1))
    for (HalfInt k : projections(l2)) {
      const CGKeySU2 key{l1, l2, l, j, k, j + k};
      if (!cg_allowed(key)) continue;
      const double racah = cg_su2(key), closed = cg_su2_3f2(key);
      const bool rz = std::abs(racah) < 1e-13, cz = std::abs(closed) < 1e-13;
      if (rz != cz) ++out.zero_mismatches;
      if (rz || cz) continue;
      const double ratio = closed / racah;
      out.entries.push_back({j, k, racah, closed, ratio});
      if (first || ratio < out.min_ratio) out.min_ratio = ratio;
      if (first || ratio > out.max_ratio) out.max_ratio = ratio;
      first = false;
    }
  return out;
}

VectorXc CoupledVector::dense(const RepLabel& a, const RepLabel& b) const {
  const Basis ba = enumerate_basis(a.l1, a.l2), bb = enumerate_basis(b.l1, b.l2);
  VectorXc v = VectorXc::Zero(static_cast<Eigen::Index>(ba.size() * bb.size()));
  for (const auto& amp : amplitudes) {
    auto i = std::find(ba.begin(), ba.end(), amp.first) - ba.begin();
    auto j = std::find(bb.begin(), bb.end(), amp.second) - bb.begin();
    v(static_cast<Eigen::Index>(i * static_cast<long>(bb.size()) + j)) = amp.value;
  }
  return v;
}

CoupledVector coupled_vector(const RepLabel& a, const RepLabel& b, HalfInt l, HalfInt lp, HalfInt m, HalfInt mp) {
  const auto series = cg_series(a, b);
  if (std::find(series.begin(), series.end(), RepLabel{l, lp}) == series.end())
    throw std::invalid_argument("coupled_vector: " + RepLabel{l, lp}.str() + " is not in " + a.str() + "x" + b.str());
  if (abs(m) > l || abs(mp) > lp || !(l - m).is_integer() || !(lp - mp).is_integer())
    throw std::domain_error("coupled_vector: projection out of range");
  CoupledVector out{l, lp, m, mp, {}};
  for (HalfInt j : projections(a.l1))
    for (HalfInt jp : projections(a.l2))
      for (HalfInt k : projections(b.l1))
        for (HalfInt kp : projections(b.l2)) {
          if (j + k != m || jp + kp != mp) continue;
          const double v = cg_sl2c({{a.l1, b.l1, l, j, k, m}, {a.l2, b.l2, lp, jp, kp, mp}});
          if (v == 0.0) continue;
          out.amplitudes.push_back({{a.l1, j, a.l2, jp, 0}, {b.l1, k, b.l2, kp, 0}, v});
        }
  return out;
}

CMatrix bilinear_form(int k, int r, double lambda) {
  if (k < 0 || r < 0 || (k + r) % 2 != 0) throw std::domain_error("bilinear_form: k + r must be even and non-negative");
  const int n = (k + r) / 2 + 1;
  Basis basis;
  for (HalfInt m : projections(HalfInt::halves(n - 1))) basis.push_back({HalfInt::halves(n - 1), m, HalfInt(0), HalfInt(0), 0});
  CMatrix out = CMatrix::zero(basis);
  for (int i = 1; i <= n; ++i) out(i - 1, n - i) = (i % 2) ? lambda : -lambda;
  return out;
}

bool is_symmetric(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && (m.data() - m.data().transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool is_skew_symmetric(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && (m.data() + m.data().transpose()).cwiseAbs().maxCoeff() <= tol;
}

int sym_dimension(int k, int r) {
  if (k < 0 || r < 0) throw std::domain_error("sym_dimension: negative argument");
  return (k + 1) * (r + 1);
}

CMatrix symmetrizer_one_row(int m) {
  if (m < 1) throw std::domain_error("symmetrizer_one_row: m must be positive");
  if (m > 10) throw std::length_error("symmetrizer_one_row: m = " + std::to_string(m) + " exceeds the cap of 10");
  const int dim = 1 << m;
  Basis basis;
  for (int s = 0; s < dim; ++s) basis.push_back({HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0), s});
  // Permutations mapping state y to x exist iff the Hamming weights agree;
  // there are w!(m-w)! of them, giving the entry 1/binom(m, w).
  std::vector<double> inv_binom(static_cast<std::size_t>(m) + 1);
  for (int w = 0; w <= m; ++w) inv_binom[static_cast<std::size_t>(w)] = factorial(w) * factorial(m - w) / factorial(m);
  MatrixXc p = MatrixXc::Zero(dim, dim);
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      const int wx = std::popcount(static_cast<unsigned>(x));
      if (wx == std::popcount(static_cast<unsigned>(y))) p(x, y) = inv_binom[static_cast<std::size_t>(wx)];
    }
  return CMatrix(basis, basis, p);
}

}  // namespace lorentz
