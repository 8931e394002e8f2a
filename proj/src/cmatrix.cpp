#include "lorentz/cmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lorentz {

namespace {

Eigen::Index position(const Basis& basis, const BasisIndex& b) {
  auto it = std::find(basis.begin(), basis.end(), b);
  if (it == basis.end()) throw std::out_of_range("basis label " + b.str() + " not present");
  return static_cast<Eigen::Index>(it - basis.begin());
}

void require_injective(const Basis& basis) {
  std::unordered_map<BasisIndex, int, BasisIndexHash> seen;
  for (const auto& b : basis)
    if (++seen[b] > 1) throw std::invalid_argument("duplicate basis label " + b.str());
}

}  // namespace

CMatrix::CMatrix(Basis rows, Basis cols)
    : rows_(std::move(rows)), cols_(std::move(cols)),
      data_(MatrixXc::Zero(static_cast<Eigen::Index>(rows_.size()), static_cast<Eigen::Index>(cols_.size()))) {
  check_injective();
}

CMatrix::CMatrix(Basis rows, Basis cols, MatrixXc data)
    : rows_(std::move(rows)), cols_(std::move(cols)), data_(std::move(data)) {
  if (data_.rows() != static_cast<Eigen::Index>(rows_.size()) ||
      data_.cols() != static_cast<Eigen::Index>(cols_.size()))
    throw std::invalid_argument("matrix shape does not match its labels");
  check_injective();
}

CMatrix CMatrix::identity(const Basis& basis) {
  auto n = static_cast<Eigen::Index>(basis.size());
  return CMatrix(basis, basis, MatrixXc::Identity(n, n));
}

void CMatrix::check_injective() const {
  require_injective(rows_);
  require_injective(cols_);
}

Eigen::Index CMatrix::row_of(const BasisIndex& b) const { return position(rows_, b); }
Eigen::Index CMatrix::col_of(const BasisIndex& b) const { return position(cols_, b); }

CMatrix CMatrix::permuted(const Basis& rows, const Basis& cols) const {
  if (rows.size() != rows_.size() || cols.size() != cols_.size())
    throw std::invalid_argument("permuted: label count mismatch");
  CMatrix out(rows, cols);
  std::vector<Eigen::Index> ri(rows.size()), ci(cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) ri[i] = row_of(rows[i]);
  for (std::size_t j = 0; j < cols.size(); ++j) ci[j] = col_of(cols[j]);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = data_(ri[i], ci[j]);
  return out;
}

double CMatrix::max_abs() const { return data_.size() == 0 ? 0.0 : data_.cwiseAbs().maxCoeff(); }

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (!same_layout(o)) return *this + o.permuted(rows_, cols_);
  return CMatrix(rows_, cols_, data_ + o.data_);
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (!same_layout(o)) return *this - o.permuted(rows_, cols_);
  return CMatrix(rows_, cols_, data_ - o.data_);
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) {
    if (cols_.size() != o.rows_.size()) throw std::invalid_argument("product: inner dimension mismatch");
    return *this * o.permuted(cols_, o.cols_);
  }
  return CMatrix(rows_, o.cols_, data_ * o.data_);
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  auto combine = [](const Basis& x, const Basis& y) {
    Basis out;
    for (const auto& p : x)
      for (const auto& q : y) {
        if (p.ldot.twice() || p.mdot.twice() || q.ldot.twice() || q.mdot.twice() || p.block || q.block)
          throw std::invalid_argument("kron: factors must carry plain (l, m) labels");
        out.push_back({p.l, p.m, q.l, q.m, 0});
      }
    return out;
  };
  MatrixXc d(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      d.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.data();
  return CMatrix(combine(a.row_basis(), b.row_basis()), combine(a.col_basis(), b.col_basis()), d);
}

CMatrix direct_sum(const std::vector<CMatrix>& blocks) {
  Basis rows, cols;
  Eigen::Index nr = 0, nc = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (auto b : blocks[k].row_basis()) rows.push_back({b.l, b.m, b.ldot, b.mdot, static_cast<int>(k)});
    for (auto b : blocks[k].col_basis()) cols.push_back({b.l, b.m, b.ldot, b.mdot, static_cast<int>(k)});
    nr += blocks[k].rows();
    nc += blocks[k].cols();
  }
  MatrixXc d = MatrixXc::Zero(nr, nc);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    d.block(r, c, b.rows(), b.cols()) = b.data();
    r += b.rows();
    c += b.cols();
  }
  return CMatrix(std::move(rows), std::move(cols), std::move(d));
}

}  // namespace lorentz
