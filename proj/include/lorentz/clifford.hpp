#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/cmatrix.hpp"

namespace lorentz {

// i^phase * X^x Z^z on `qubits` tensor factors; factor 0 is the leftmost
// (most significant) one. Products are exact.
class PauliString {
 public:
  PauliString() = default;
  static PauliString identity(int qubits);
  // which: 0 identity, 1 sigma1, 2 sigma2, 3 sigma3.
  static PauliString from_factors(const std::vector<int>& which);

  int qubits() const { return qubits_; }
  std::uint32_t x_bits() const { return x_; }
  std::uint32_t z_bits() const { return z_; }
  int phase() const { return phase_; }

  PauliString operator*(const PauliString& o) const;
  PauliString operator-() const;
  PauliString scaled_by_i(int power) const;
  bool operator==(const PauliString& o) const = default;
  // Same operator up to the phase factor.
  bool same_support(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_ && qubits_ == o.qubits_; }
  // Direct sum with a 1-qubit factor in front: I (x) P or sigma3 (x) P.
  PauliString prepend(int which) const;

  MatrixXc dense() const;
  std::string str() const;

 private:
  int qubits_ = 0;
  std::uint32_t x_ = 0, z_ = 0;
  int phase_ = 0;  // modulo 4
};

struct CliffordBasis {
  int n = 0;
  // Even n: the 2m generators on m factors. Odd n: direct sums E_i (+) E_i
  // for i <= 2m and E_{2m+1} (+) (-E_{2m+1}), on m + 1 factors.
  std::vector<PauliString> generators;
  int matrix_size() const { return generators.empty() ? 1 : 1 << generators.front().qubits(); }
  // Odd n: the 2m+1 generators of summand s (0: +E_{2m+1}, 1: -E_{2m+1}).
  std::vector<PauliString> summand(int s) const;
};

CliffordBasis brauer_weyl(int n);

struct CliffordReport {
  bool passed = true;
  std::vector<std::pair<int, int>> failures;  // 1-based generator pairs
  // Distinct monomials among all generator products; per summand when n is odd.
  std::vector<int> span_dimensions;
  std::vector<int> expected_span;
};

CliffordReport verify_clifford(const CliffordBasis& basis);

struct OddDirectSumReport {
  int m = 0;
  int summand_size = 0;
  std::vector<int> span_dimensions;  // both summands
  bool volume_central = false;
  std::vector<cplx> volume_scalars;  // omega restricted to each summand
  bool summands_commute = false;
  double algebra_map_residual = 0;  // max over random products
  int random_products = 0;
  bool passed = false;
};

// Builds E_i (+) E_i and checks the two summands; `samples` random products
// test that summand selection is multiplicative.
OddDirectSumReport odd_direct_sum(int m, int samples = 100, unsigned seed = 12345);

struct SchurCoverGens {
  int m = 0;
  std::vector<MatrixXc> t;  // t_1 .. t_m
};

SchurCoverGens schur_transpositions(int m);

struct SchurReport {
  // Realized scalars: t_k^2 = s1, (t_j t_{j+1})^3 = s2, t_k t_l = s3 t_l t_k.
  std::optional<cplx> s1, s2, s3;
  bool scalar_classes = true;
  double max_deviation = 0;
  bool unitary_traceless = true;
  // Words up to length 4 with equal permutations give matrices equal up to sign,
  // and distinct permutations never do (checked when m <= 5).
  std::optional<bool> homomorphism;
  // Same relations for i*t_k.
  std::optional<cplx> twisted_s1, twisted_s2, twisted_s3;
  std::vector<std::string> failures;
};

SchurReport verify_tn_relations(const SchurCoverGens& gens);

}  // namespace lorentz
