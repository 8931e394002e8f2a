#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lorentz/half_int.hpp"
#include "lorentz/special.hpp"

namespace lorentz {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;
using Basis = std::vector<BasisIndex>;

// Dense complex matrix with labelled rows and columns.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(Basis rows, Basis cols);
  CMatrix(Basis rows, Basis cols, MatrixXc data);
  static CMatrix zero(const Basis& basis) { return CMatrix(basis, basis); }
  static CMatrix identity(const Basis& basis);

  const Basis& row_basis() const { return rows_; }
  const Basis& col_basis() const { return cols_; }
  Eigen::Index rows() const { return data_.rows(); }
  Eigen::Index cols() const { return data_.cols(); }

  const MatrixXc& data() const { return data_; }
  MatrixXc& data() { return data_; }

  cplx operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }
  cplx& operator()(Eigen::Index i, Eigen::Index j) { return data_(i, j); }

  // Position of a label; throws std::out_of_range when absent.
  Eigen::Index row_of(const BasisIndex& b) const;
  Eigen::Index col_of(const BasisIndex& b) const;
  cplx at(const BasisIndex& r, const BasisIndex& c) const { return data_(row_of(r), col_of(c)); }
  cplx& at(const BasisIndex& r, const BasisIndex& c) { return data_(row_of(r), col_of(c)); }

  bool same_layout(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  // Same matrix re-expressed with rows/cols in the given label order.
  CMatrix permuted(const Basis& rows, const Basis& cols) const;

  double max_abs() const;

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator-() const { return CMatrix(rows_, cols_, -data_); }
  friend CMatrix operator*(cplx s, const CMatrix& m) { return CMatrix(m.rows_, m.cols_, s * m.data_); }

  CMatrix adjoint() const { return CMatrix(cols_, rows_, data_.adjoint()); }
  CMatrix transpose() const { return CMatrix(cols_, rows_, data_.transpose()); }
  CMatrix conjugate() const { return CMatrix(rows_, cols_, data_.conjugate()); }

 private:
  void check_injective() const;
  Basis rows_, cols_;
  MatrixXc data_;
};

CMatrix commutator(const CMatrix& a, const CMatrix& b);

// Max entrywise difference after aligning b's labels with a's.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Kronecker product; labels combine (l, m) from a with (ldot, mdot) from b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Block-diagonal direct sum; block tags of the result count the summands from 0.
CMatrix direct_sum(const std::vector<CMatrix>& blocks);

}  // namespace lorentz
