#include "lorentz/gelfand_yaglom.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "lorentz/su2.hpp"

namespace lorentz {

namespace {

using K = OperatorKind;
const cplx I{0, 1};

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

bool in_content(const RepLabel& rep, HalfInt l) {
  const auto c = rotation_content(rep);
  return std::find(c.begin(), c.end(), l) != c.end();
}

double weight(HalfInt lp, HalfInt l, HalfInt m) {
  const double lv = l.value(), mv = m.value();
  if (lp == l) return mv;
  if (lp == l - HalfInt(1)) return std::sqrt(std::max(0.0, lv * lv - mv * mv));
  return std::sqrt(std::max(0.0, (lv + 1) * (lv + 1) - mv * mv));
}

std::string idx(int i) { return std::to_string(i + 1); }

std::string signed_term(int sign, const std::string& imag, const std::string& name) {
  if (sign == 0) return "0";
  return std::string(sign > 0 ? "" : "-") + imag + name;
}

// [G_i, L_j] = factor * eps_ijk L_k for all nine (i, j).
void vector_table(InvarianceReport& rep, const std::string& table, const std::array<const CMatrix*, 3>& g,
                  const std::string& gname, const std::array<CMatrix, 3>& l, const std::string& lname, cplx factor) {
  const std::string imag = factor.imag() != 0 ? "i" : "";
  const int base = factor.real() + factor.imag() > 0 ? 1 : -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CMatrix rhs = CMatrix(l[0].row_basis(), l[0].col_basis());
      int sign = 0;
      for (int k = 0; k < 3; ++k)
        if (const int e = levi_civita(i, j, k); e != 0) {
          rhs = (factor * static_cast<double>(e)) * l[static_cast<std::size_t>(k)];
          sign = e * base;
          rep.relations.push_back({table,
                                   "[" + gname + idx(i) + "," + lname + idx(j) + "]=" +
                                       signed_term(sign, imag, lname + idx(k)),
                                   max_abs_diff(commutator(*g[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)]), rhs)});
        }
      if (sign == 0)
        rep.relations.push_back({table, "[" + gname + idx(i) + "," + lname + idx(j) + "]=0",
                                 commutator(*g[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)]).max_abs()});
    }
}

void ladder_group(InvarianceReport& rep, const std::string& table, const CMatrix& l3, const std::string& lname,
                  const OperatorSet& gens, K p, K m, K z, const std::string& own, K op, K om, K oz,
                  const std::string& other) {
  rep.relations.push_back({table, "[" + own + "+,[" + lname + "," + own + "-]]=2" + lname,
                           max_abs_diff(commutator(gens.at(p), commutator(l3, gens.at(m))), 2.0 * l3)});
  rep.relations.push_back({table, "[" + lname + "," + own + "3]=0", commutator(l3, gens.at(z)).max_abs()});
  rep.relations.push_back({table, "[" + lname + "," + other + "-]=0", commutator(l3, gens.at(om)).max_abs()});
  rep.relations.push_back({table, "[" + lname + "," + other + "+]=0", commutator(l3, gens.at(op)).max_abs()});
  rep.relations.push_back({table, "[" + lname + "," + other + "3]=0", commutator(l3, gens.at(oz)).max_abs()});
}

std::array<const CMatrix*, 3> triple(const OperatorSet& g, K a, K b, K c) { return {&g.at(a), &g.at(b), &g.at(c)}; }

}  // namespace

bool is_interlocking(const RepLabel& a, const RepLabel& b) {
  return abs(a.l1 - b.l1) == kHalf && abs(a.l2 - b.l2) == kHalf;
}

std::vector<HalfInt> rotation_content(const RepLabel& rep) {
  std::vector<HalfInt> out;
  for (HalfInt l = abs(rep.l1 - rep.l2); l <= rep.l1 + rep.l2; l += HalfInt(1)) out.push_back(l);
  return out;
}

const RepLabel& RepChain::rep(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("chain member " + std::to_string(k) + " does not exist");
  return reps[static_cast<std::size_t>(k - 1)];
}

std::vector<std::pair<int, int>> RepChain::links() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= size(); ++a)
    for (int b = a + 1; b <= size(); ++b)
      if (is_interlocking(rep(a), rep(b))) out.push_back({a, b});
  return out;
}

bool RepChain::linked(int k, int kp) const { return is_interlocking(rep(k), rep(kp)); }

int RepChain::dimension() const {
  int d = 0;
  for (const auto& r : reps) d += r.dimension();
  return d;
}

Basis RepChain::helicity_basis() const {
  Basis out;
  for (int k = 1; k <= size(); ++k)
    for (BasisIndex b : enumerate_basis(rep(k).l1, rep(k).l2)) {
      b.block = k - 1;
      out.push_back(b);
    }
  return out;
}

Basis RepChain::rotation_basis() const {
  Basis out;
  for (int k = 1; k <= size(); ++k)
    for (HalfInt l : rotation_content(rep(k)))
      for (HalfInt m : projections(l)) out.push_back({l, m, HalfInt(0), HalfInt(0), k - 1});
  return out;
}

void validate_coefficients(const RepChain& chain, const CoeffTable& table) {
  for (const auto& c : table) {
    const std::string where = "coefficient c^{" + std::to_string(c.to) + "," + std::to_string(c.from) + "}_{" +
                              c.lp.str() + "," + c.l.str() + "}: ";
    if (c.to < 1 || c.to > chain.size() || c.from < 1 || c.from > chain.size())
      throw std::invalid_argument(where + "member index out of range");
    if (c.to != c.from && !chain.linked(c.to, c.from))
      throw std::invalid_argument(where + "members " + chain.rep(c.to).str() + " and " + chain.rep(c.from).str() +
                                  " are not interlocking");
    if (!in_content(chain.rep(c.to), c.lp) || !in_content(chain.rep(c.from), c.l))
      throw std::invalid_argument(where + "spin outside the rotation content");
    const HalfInt d = c.lp - c.l;
    if (!d.is_integer() || abs(d) > HalfInt(1)) throw std::invalid_argument(where + "|l' - l| must be 0 or 1");
  }
}

CMatrix rotation_to_helicity(const RepChain& chain) {
  const Basis rows = chain.helicity_basis(), cols = chain.rotation_basis();
  CMatrix u(rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const BasisIndex &h = rows[i], &r = cols[j];
      if (h.block != r.block || h.m + h.mdot != r.m) continue;
      u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cg_su2({h.l, h.ldot, r.l, h.m, h.mdot, r.m});
    }
  return u;
}

CMatrix assemble_lambda3_rotation(const RepChain& chain, const CoeffTable& table) {
  validate_coefficients(chain, table);
  CMatrix out = CMatrix::zero(chain.rotation_basis());
  for (const auto& c : table)
    for (HalfInt m : projections(c.l)) {
      if (abs(m) > c.lp) continue;
      const BasisIndex row{c.lp, m, HalfInt(0), HalfInt(0), c.to - 1};
      const BasisIndex col{c.l, m, HalfInt(0), HalfInt(0), c.from - 1};
      out.at(row, col) += c.value * weight(c.lp, c.l, m);
    }
  return out;
}

CMatrix assemble_lambda3(const RepChain& chain, const CoeffTable& table) {
  const CMatrix u = rotation_to_helicity(chain);
  return u * assemble_lambda3_rotation(chain, table) * u.adjoint();
}

OperatorSet chain_generators(const RepChain& chain) {
  if (chain.reps.empty()) throw std::invalid_argument("chain_generators: empty chain");
  std::vector<OperatorSet> parts;
  for (const auto& r : chain.reps) parts.push_back(anti_hermitian_from_waerden(waerden_set(r.l1, r.l2)));
  OperatorSet out;
  out.convention = Convention::anti_hermitian;
  for (const auto& [kind, unused] : parts.front().ops) {
    std::vector<CMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.at(kind));
    out.ops.emplace(kind, direct_sum(blocks));
  }
  const std::pair<K, K> tilde[] = {{K::A1, K::At1}, {K::A2, K::At2}, {K::A3, K::At3},
                                   {K::B1, K::Bt1}, {K::B2, K::Bt2}, {K::B3, K::Bt3}};
  for (const auto& [plain, t] : tilde) out.ops.emplace(t, -out.at(plain));
  return out;
}

double InvarianceReport::max_residual() const {
  double m = 0;
  for (const auto& r : relations) m = std::max(m, r.residual);
  return m;
}

double InvarianceReport::max_residual(const std::string& table) const {
  double m = 0;
  for (const auto& r : relations)
    if (r.table == table) m = std::max(m, r.residual);
  return m;
}

std::vector<InvarianceRelation> InvarianceReport::violations(double tol) const {
  std::vector<InvarianceRelation> out;
  for (const auto& r : relations)
    if (r.residual > tol) out.push_back(r);
  return out;
}

std::array<CMatrix, 3> lambda12_from_commutators(const CMatrix& lambda3, const OperatorSet& gens, double tol) {
  const CMatrix l1 = commutator(gens.at(K::A2), lambda3);
  const CMatrix l2 = commutator(gens.at(K::A3), l1);
  std::array<CMatrix, 3> out{l1, l2, lambda3};
  InvarianceReport rep;
  vector_table(rep, "AL", triple(gens, K::A1, K::A2, K::A3), "A", out, "L", 1.0);
  if (rep.max_residual() > tol)
    throw InconsistencyError("lambda12_from_commutators: rotation relations violated (max residual " +
                                 std::to_string(rep.max_residual()) + ")",
                             rep);
  return out;
}

std::array<CMatrix, 3> lambda12_dot_from_commutators(const CMatrix& lambda3_dot, const OperatorSet& gens, double tol) {
  const CMatrix l1 = -commutator(gens.at(K::At2), lambda3_dot);
  const CMatrix l2 = -commutator(gens.at(K::At3), l1);
  std::array<CMatrix, 3> out{l1, l2, lambda3_dot};
  InvarianceReport rep;
  vector_table(rep, "DAL", triple(gens, K::At1, K::At2, K::At3), "At", out, "L*", -1.0);
  if (rep.max_residual() > tol)
    throw InconsistencyError("lambda12_dot_from_commutators: rotation relations violated (max residual " +
                                 std::to_string(rep.max_residual()) + ")",
                             rep);
  return out;
}

GYSystem build_gy_system(const RepChain& chain, const CoeffTable& coeffs, const CoeffTable& coeffs_dot, cplx kappa,
                         cplx kappa_dot) {
  if (chain.reps.empty()) throw std::invalid_argument("build_gy_system: empty chain");
  GYSystem sys;
  sys.chain = chain;
  sys.coeffs = coeffs;
  sys.coeffs_dot = coeffs_dot;
  sys.kappa = kappa;
  sys.kappa_dot = kappa_dot;
  const OperatorSet gens = chain_generators(chain);
  sys.lambda = lambda12_from_commutators(assemble_lambda3(chain, coeffs), gens);
  sys.lambda_dot = lambda12_dot_from_commutators(assemble_lambda3(chain, coeffs_dot), gens);
  return sys;
}

InvarianceReport verify_ly_lx(const CMatrix& lambda3, const CMatrix& lambda3_dot, const OperatorSet& gens) {
  InvarianceReport rep;
  ladder_group(rep, "LY", lambda3, "L3", gens, K::Yp, K::Ym, K::Y3, "Y", K::Xp, K::Xm, K::X3, "X");
  ladder_group(rep, "LX", lambda3_dot, "L*3", gens, K::Xp, K::Xm, K::X3, "X", K::Yp, K::Ym, K::Y3, "Y");
  return rep;
}

InvarianceReport verify_invariance(const GYSystem& sys, const OperatorSet& gens) {
  InvarianceReport rep;
  vector_table(rep, "AL", triple(gens, K::A1, K::A2, K::A3), "A", sys.lambda, "L", 1.0);
  vector_table(rep, "BL", triple(gens, K::B1, K::B2, K::B3), "B", sys.lambda, "L", I);
  vector_table(rep, "DAL", triple(gens, K::At1, K::At2, K::At3), "At", sys.lambda_dot, "L*", -1.0);
  vector_table(rep, "DBL", triple(gens, K::Bt1, K::Bt2, K::Bt3), "Bt", sys.lambda_dot, "L*", I);
  const InvarianceReport ladders = verify_ly_lx(sys.lambda[2], sys.lambda_dot[2], gens);
  rep.relations.insert(rep.relations.end(), ladders.relations.begin(), ladders.relations.end());
  return rep;
}

std::vector<Component> classify(const RepChain& chain) {
  std::vector<int> parent(static_cast<std::size_t>(chain.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [a, b] : chain.links()) {
    const int ra = find(a - 1), rb = find(b - 1);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  std::map<int, Component> groups;
  for (int k = 0; k < chain.size(); ++k) groups[find(k)].members.push_back(k + 1);
  std::vector<Component> out;
  for (auto& [root, c] : groups) {
    c.indecomposable = c.members.size() >= 2;
    out.push_back(c);
  }
  return out;
}

std::vector<std::pair<int, int>> spin_block_members(const RepChain& chain, HalfInt s) {
  auto fits = [&](const RepLabel& r) { return abs(r.l1 - r.l2) <= s && s <= r.l1 + r.l2; };
  std::vector<std::pair<int, int>> out;
  if (s < HalfInt(0)) return out;
  for (const auto& [a, b] : chain.links())
    if (fits(chain.rep(a)) && fits(chain.rep(b))) out.push_back({a, b});
  return out;
}

ProjectionBlocks projection_blocks(const CMatrix& lambda3) {
  const Basis& basis = lambda3.row_basis();
  ProjectionBlocks pb;
  std::map<HalfInt, std::vector<Eigen::Index>, std::greater<>> groups;
  for (std::size_t i = 0; i < basis.size(); ++i)
    groups[basis[i].m + basis[i].mdot].push_back(static_cast<Eigen::Index>(i));
  const CMatrix aligned = lambda3.permuted(basis, basis);
  std::vector<HalfInt> proj_of(basis.size());
  for (const auto& [p, rows] : groups) {
    pb.projections.push_back(p);
    Basis members;
    MatrixXc block(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      members.push_back(basis[static_cast<std::size_t>(rows[a])]);
      proj_of[static_cast<std::size_t>(rows[a])] = p;
      for (std::size_t b = 0; b < rows.size(); ++b)
        block(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = aligned(rows[a], rows[b]);
    }
    pb.members.push_back(members);
    pb.blocks.push_back(block);
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (proj_of[i] != proj_of[j])
        pb.off_block_max = std::max(pb.off_block_max, std::abs(aligned(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
  return pb;
}

CMatrix ProjectionBlocks::reassemble(const Basis& rows) const {
  CMatrix out = CMatrix::zero(rows);
  for (std::size_t g = 0; g < blocks.size(); ++g)
    for (std::size_t a = 0; a < members[g].size(); ++a)
      for (std::size_t b = 0; b < members[g].size(); ++b)
        out.at(members[g][a], members[g][b]) = blocks[g](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  return out;
}

bool SpinBlock::has_nonzero_root(double tol) const {
  return std::any_of(eigenvalues.begin(), eigenvalues.end(), [&](cplx e) { return std::abs(e) > tol; });
}

SpinBlock spin_block(const RepChain& chain, const CoeffTable& table, HalfInt s) {
  validate_coefficients(chain, table);
  SpinBlock sb;
  sb.s = s;
  for (int k = 1; k <= chain.size(); ++k)
    if (in_content(chain.rep(k), s)) sb.members.push_back(k);
  const auto n = static_cast<Eigen::Index>(sb.members.size());
  sb.matrix = MatrixXc::Zero(n, n);
  for (const auto& c : table) {
    if (c.lp != s || c.l != s) continue;
    const auto r = std::find(sb.members.begin(), sb.members.end(), c.to) - sb.members.begin();
    const auto q = std::find(sb.members.begin(), sb.members.end(), c.from) - sb.members.begin();
    sb.matrix(r, q) += c.value;
  }
  if (n > 0) {
    Eigen::ComplexEigenSolver<MatrixXc> es(sb.matrix);
    for (Eigen::Index i = 0; i < n; ++i) sb.eigenvalues.push_back(es.eigenvalues()(i));
  }
  return sb;
}

std::array<MatrixXc, 3> weyl_gammas() {
  MatrixXc s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  auto kron2 = [](const MatrixXc& a, const MatrixXc& b) {
    MatrixXc out(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    return out;
  };
  return {I * kron2(s2, s1), I * kron2(s2, s2), I * kron2(s2, s3)};
}

SimilarityResult similarity_to_gamma(const std::array<CMatrix, 3>& lambda) {
  for (const auto& l : lambda)
    if (l.rows() != 4 || l.cols() != 4) throw std::invalid_argument("similarity_to_gamma: 4x4 matrices required");
  const auto gamma = weyl_gammas();
  const MatrixXc id = MatrixXc::Identity(4, 4);
  const cplx lambda_sq = (lambda[0].data() * lambda[0].data()).trace() / (gamma[0] * gamma[0]).trace();
  SimilarityResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    const cplx scale = sign * std::sqrt(lambda_sq);
    MatrixXc system(48, 16);
    for (int i = 0; i < 3; ++i) {
      MatrixXc left(16, 16), right(16, 16);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          left.block(4 * a, 4 * b, 4, 4) = id(a, b) * lambda[static_cast<std::size_t>(i)].data();
          right.block(4 * a, 4 * b, 4, 4) = gamma[static_cast<std::size_t>(i)](b, a) * id;
        }
      system.block(16 * i, 0, 16, 16) = left - scale * right;
    }
    Eigen::JacobiSVD<MatrixXc> svd(system, Eigen::ComputeFullV);
    const VectorXc v = svd.matrixV().col(15);
    const MatrixXc s = Eigen::Map<const MatrixXc>(v.data(), 4, 4);
    double residual = 0;
    for (int i = 0; i < 3; ++i)
      residual = std::max(residual, (lambda[static_cast<std::size_t>(i)].data() * s -
                                     scale * s * gamma[static_cast<std::size_t>(i)]).norm() / s.norm());
    if (residual < best.residual) {
      best.scale = scale;
      best.transform = s;
      best.residual = residual;
      Eigen::JacobiSVD<MatrixXc> ssv(s / s.norm());
      best.transform_min_sv = ssv.singularValues()(3);
    }
  }
  return best;
}

CoeffTable random_coeff_table(const RepChain& chain, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  CoeffTable table;
  for (int to = 1; to <= chain.size(); ++to)
    for (int from = 1; from <= chain.size(); ++from) {
      if (to != from && !chain.linked(to, from)) continue;
      for (HalfInt l : rotation_content(chain.rep(from)))
        for (HalfInt lp : rotation_content(chain.rep(to))) {
          const HalfInt d = lp - l;
          if (!d.is_integer() || abs(d) > HalfInt(1)) continue;
          const double re = dist(rng), im = dist(rng);
          table.push_back({to, from, lp, l, {re, im}});
        }
    }
  return table;
}

}  // namespace lorentz
