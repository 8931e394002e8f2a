#pragma once

#include <optional>
#include <vector>

#include "lorentz/cmatrix.hpp"
#include "lorentz/su2.hpp"

namespace lorentz {

// Irreducible representation tau_{l1 l2}.
struct RepLabel {
  HalfInt l1, l2;
  auto operator<=>(const RepLabel&) const = default;
  int dimension() const { return (l1.twice() + 1) * (l2.twice() + 1); }
  std::string str() const { return "(" + l1.str() + "," + l2.str() + ")"; }
};

// Irreducible summands of tau_a (x) tau_b, each once, ordered by (l1, l2).
std::vector<RepLabel> cg_series(const RepLabel& a, const RepLabel& b);

struct CGKeySL2C {
  CGKeySU2 undotted, dotted;
};

// Product of the two SU(2) coefficients.
double cg_sl2c(const CGKeySL2C& key);
// Product of the two 3F2-form SU(2) factors.
double cg_sl2c_3f2(const CGKeySL2C& key);

// Ratio of the 3F2 form to the Racah value over all nonzero keys of one (l1, l2, l).
struct CGConversion {
  HalfInt l1, l2, l;
  struct Entry {
    HalfInt j, k;
    double racah, closed_form, ratio;
  };
  std::vector<Entry> entries;
  // Keys where exactly one of the two forms vanishes.
  int zero_mismatches = 0;
  double min_ratio = 0, max_ratio = 0;
  bool constant(double tol) const;
};
CGConversion cg_conversion(HalfInt l1, HalfInt l2, HalfInt l);

// z^{l l'}_{m m'} in tau_a (x) tau_b.
struct CoupledVector {
  HalfInt l, lp, m, mp;
  struct Amplitude {
    BasisIndex first, second;
    double value;
  };
  std::vector<Amplitude> amplitudes;
  // Components in kron order: enumerate_basis(a) outer, enumerate_basis(b) inner.
  VectorXc dense(const RepLabel& a, const RepLabel& b) const;
};

CoupledVector coupled_vector(const RepLabel& a, const RepLabel& b, HalfInt l, HalfInt lp, HalfInt m, HalfInt mp);

// Antidiagonal form of size (r+k)/2 + 1 with entry lambda*(-1)^{i+1} in row i (1-based).
// Labels carry spin (r+k)/4 with m descending.
CMatrix bilinear_form(int k, int r, double lambda = 1.0);
bool is_symmetric(const CMatrix& m, double tol = 0.0);
bool is_skew_symmetric(const CMatrix& m, double tol = 0.0);

int sym_dimension(int k, int r);

// (1/m!) sum over permutations of the m tensor factors of C^2. Rows are
// labelled by the computational basis state in `block`, most significant
// factor first.
CMatrix symmetrizer_one_row(int m);

}  // namespace lorentz
