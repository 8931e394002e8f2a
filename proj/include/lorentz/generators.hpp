#pragma once

#include <map>
#include <string>
#include <vector>

#include "lorentz/cmatrix.hpp"

namespace lorentz {

enum class OperatorKind {
  A1, A2, A3, B1, B2, B3,
  At1, At2, At3, Bt1, Bt2, Bt3,
  Xp, Xm, X3, Yp, Ym, Y3,
  Hp, Hm, H3, Fp, Fm, F3,
};

std::string to_string(OperatorKind k);
// Accepts the names produced by to_string ("A1", "At1", "X+", "Y-", ...).
OperatorKind parse_operator_kind(const std::string& name);
std::vector<OperatorKind> all_operator_kinds();

// Hermitian ladder form (X3 = mdot, [X+,X-] = 2X3) versus the anti-Hermitian
// form (X_k = -i J_k, [X+,X-] = -2i X3) that carries A_k = X_k + Y_k.
enum class Convention { hermitian_ladder, anti_hermitian };

struct OperatorSet {
  Convention convention = Convention::anti_hermitian;
  std::map<OperatorKind, CMatrix> ops;

  bool has(OperatorKind k) const { return ops.count(k) != 0; }
  // Throws std::out_of_range naming the missing operator.
  const CMatrix& at(OperatorKind k) const;
};

// Van der Waerden action on enumerate_basis(l, ldot): X acts on mdot, Y on m.
CMatrix waerden_op(OperatorKind kind, HalfInt l, HalfInt ldot);
OperatorSet waerden_set(HalfInt l, HalfInt ldot);

// Helicity-basis A, B and their tilde partners on the 2l+1 vectors xi_m,
// labelled (l, m; 0, 0). "A xi_m = c xi_m'" is read as matrix entry (m', m).
CMatrix helicity_ab_op(OperatorKind kind, HalfInt l);
OperatorSet helicity_set(HalfInt l);        // A1..B3
OperatorSet helicity_tilde_set(HalfInt l);  // At1..Bt3

struct GNRepLabel {
  HalfInt l0;
  int p = 1;  // l1 = l0 + p
  HalfInt l1() const { return l0 + HalfInt(p); }
};

cplx gn_coefficient_a(HalfInt l, const GNRepLabel& rep);
cplx gn_coefficient_c(HalfInt l, const GNRepLabel& rep);
// Carrier basis xi_{lm}, l = l0 .. l1-1 ascending, m descending.
Basis gn_basis(const GNRepLabel& rep);
CMatrix gn_op(OperatorKind kind, const GNRepLabel& rep);
OperatorSet gn_set(const GNRepLabel& rep);

// H/F set to anti-Hermitian X/Y ladders plus A_k = X_k + Y_k, B_k = -i(X_k - Y_k).
OperatorSet basis_change(const OperatorSet& gn_ops);
// Inverse map: recovers H/F from an anti-Hermitian X/Y ladder set.
OperatorSet basis_change_inverse(const OperatorSet& xy_ops);

// Hermitian ladders -> anti-Hermitian ladders (multiply by -i) plus A and B.
OperatorSet anti_hermitian_from_waerden(const OperatorSet& waerden);

// Cartesian components of a ladder triple: K1 = (K+ + K-)/2, K2 = (K+ - K-)/(2i).
struct Cartesian {
  CMatrix k1, k2, k3;
};
Cartesian cartesian(const CMatrix& plus, const CMatrix& minus, const CMatrix& k3);

// Com1: Lorentz algebra table on A/B. Com1Tilde: the same table on At/Bt.
// Com2: su(2) + su(2) on anti-Hermitian Cartesian X/Y, with [X3,X1] = X2.
// Com2TransposedVariant: the single relation [X2,X1] = X2.
// WaerdenConsistency: ladder relations in the set's own convention.
enum class RelationSet { Com1, Com1Tilde, Com2, Com2TransposedVariant, WaerdenConsistency };

struct RelationResidual {
  std::string relation;
  double residual;
};

struct CommutatorReport {
  std::vector<RelationResidual> relations;
  double max_residual() const;
};

CommutatorReport commutator_report(const OperatorSet& ops, RelationSet set);
double commutator_residual(const OperatorSet& ops, RelationSet set);

}  // namespace lorentz
