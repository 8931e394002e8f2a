#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/cmatrix.hpp"
#include "lorentz/generators.hpp"
#include "lorentz/tensor.hpp"

namespace lorentz {

// l'_1 = l_1 +- 1/2 and l'_2 = l_2 +- 1/2.
bool is_interlocking(const RepLabel& a, const RepLabel& b);

// Rotation content |l1 - l2| .. l1 + l2 of one irreducible representation.
std::vector<HalfInt> rotation_content(const RepLabel& rep);

// Representations are numbered k = 1, 2, ... in list order.
struct RepChain {
  std::vector<RepLabel> reps;

  int size() const { return static_cast<int>(reps.size()); }
  const RepLabel& rep(int k) const;
  // All interlocking pairs (k, k') with k < k'.
  std::vector<std::pair<int, int>> links() const;
  bool linked(int k, int kp) const;
  int dimension() const;
  // Helicity basis: enumerate_basis(l1, l2) per member, block = k - 1.
  Basis helicity_basis() const;
  // Rotation basis: (l, m; 0, 0) for l in rotation_content, m descending, block = k - 1.
  Basis rotation_basis() const;
};

// c^{k'k}_{l'l}: row (k', l') and column (k, l).
struct Coefficient {
  int to = 0, from = 0;  // k', k
  HalfInt lp, l;
  cplx value;
};

using CoeffTable = std::vector<Coefficient>;

// Throws std::invalid_argument for coefficients on non-links, unknown members,
// labels outside the rotation content, or |l' - l| > 1.
void validate_coefficients(const RepChain& chain, const CoeffTable& table);

// Helicity-basis matrix U with entries <l1 m1; l2 m2 | l m>, mapping rotation
// basis columns to helicity basis rows.
CMatrix rotation_to_helicity(const RepChain& chain);

// Lambda_3 in the rotation basis, placed per the three-line rule on matching m.
CMatrix assemble_lambda3_rotation(const RepChain& chain, const CoeffTable& table);
// Same operator conjugated into the helicity basis.
CMatrix assemble_lambda3(const RepChain& chain, const CoeffTable& table);

// Direct sum of per-member Waerden generators, converted to the anti-Hermitian
// form with A and B plus the tilde partners At = -A, Bt = -B.
OperatorSet chain_generators(const RepChain& chain);

struct InvarianceRelation {
  std::string table;  // AL, BL, DAL, DBL, LY, LX
  std::string relation;
  double residual;
};

struct InvarianceReport {
  std::vector<InvarianceRelation> relations;
  double max_residual() const;
  double max_residual(const std::string& table) const;
  std::vector<InvarianceRelation> violations(double tol) const;
};

class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(const std::string& what, InvarianceReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const InvarianceReport& report() const { return report_; }

 private:
  InvarianceReport report_;
};

// Lambda_1 = [A2, Lambda_3], Lambda_2 = [A3, Lambda_1]; the nine undotted
// rotation relations are then checked and an InconsistencyError carries the
// report when one exceeds `tol`.
std::array<CMatrix, 3> lambda12_from_commutators(const CMatrix& lambda3, const OperatorSet& gens, double tol = 1e-10);
// Dotted sector: Lambda*_1 = -[At2, Lambda*_3], Lambda*_2 = -[At3, Lambda*_1].
std::array<CMatrix, 3> lambda12_dot_from_commutators(const CMatrix& lambda3_dot, const OperatorSet& gens,
                                                     double tol = 1e-10);

struct GYSystem {
  RepChain chain;
  CoeffTable coeffs, coeffs_dot;
  cplx kappa{0, 1}, kappa_dot{0, 1};
  std::array<CMatrix, 3> lambda, lambda_dot;
};

// Validates, assembles both third components and recovers the rest.
GYSystem build_gy_system(const RepChain& chain, const CoeffTable& coeffs, const CoeffTable& coeffs_dot, cplx kappa,
                         cplx kappa_dot);

InvarianceReport verify_invariance(const GYSystem& sys, const OperatorSet& gens);
// Only the LY and LX groups, which need just the third components.
InvarianceReport verify_ly_lx(const CMatrix& lambda3, const CMatrix& lambda3_dot, const OperatorSet& gens);

struct Component {
  std::vector<int> members;  // 1-based, ascending
  bool indecomposable = false;
};
std::vector<Component> classify(const RepChain& chain);

// Links (k, k') whose members both satisfy |l1 - l2| <= s <= l1 + l2.
std::vector<std::pair<int, int>> spin_block_members(const RepChain& chain, HalfInt s);

// Lambda_3 grouped by total projection m + mdot.
struct ProjectionBlocks {
  std::vector<HalfInt> projections;  // descending
  std::vector<Basis> members;
  std::vector<MatrixXc> blocks;
  double off_block_max = 0;  // largest entry joining different projections
  CMatrix reassemble(const Basis& rows) const;
};
ProjectionBlocks projection_blocks(const CMatrix& lambda3);

// C^s over the members whose rotation content holds s, entries c^{k'k}_{ss}.
struct SpinBlock {
  HalfInt s;
  std::vector<int> members;
  MatrixXc matrix;
  std::vector<cplx> eigenvalues;
  bool has_nonzero_root(double tol = 1e-12) const;
};
SpinBlock spin_block(const RepChain& chain, const CoeffTable& table, HalfInt s);

// Weyl-basis spatial gammas gamma_i = i sigma2 (x) sigma_i.
std::array<MatrixXc, 3> weyl_gammas();

// Lambda_i S = lambda S gamma_i for all i, S invertible.
struct SimilarityResult {
  cplx scale;
  MatrixXc transform;
  double residual = 0;          // max_i ||Lambda_i S - lambda S gamma_i|| / ||S||
  double transform_min_sv = 0;  // smallest singular value of S (Frobenius-normalized)
  bool similar(double tol) const { return residual <= tol && transform_min_sv > 1e-6; }
};
// Throws std::invalid_argument unless the matrices are 4x4.
SimilarityResult similarity_to_gamma(const std::array<CMatrix, 3>& lambda);

// Random complex coefficients on every self pair and link, for all allowed (l', l).
CoeffTable random_coeff_table(const RepChain& chain, unsigned seed);

}  // namespace lorentz
