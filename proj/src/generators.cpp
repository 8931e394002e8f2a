#include "lorentz/generators.hpp"

#include <array>
#include <cmath>
#include <tuple>
#include <stdexcept>

namespace lorentz {

namespace {

using K = OperatorKind;
const cplx I{0, 1};

struct KindName {
  K kind;
  const char* name;
};

constexpr KindName kNames[] = {
    {K::A1, "A1"},   {K::A2, "A2"},   {K::A3, "A3"},   {K::B1, "B1"},   {K::B2, "B2"},   {K::B3, "B3"},
    {K::At1, "At1"}, {K::At2, "At2"}, {K::At3, "At3"}, {K::Bt1, "Bt1"}, {K::Bt2, "Bt2"}, {K::Bt3, "Bt3"},
    {K::Xp, "X+"},   {K::Xm, "X-"},   {K::X3, "X3"},   {K::Yp, "Y+"},   {K::Ym, "Y-"},   {K::Y3, "Y3"},
    {K::Hp, "H+"},   {K::Hm, "H-"},   {K::H3, "H3"},   {K::Fp, "F+"},   {K::Fm, "F-"},   {K::F3, "F3"},
};

// sqrt of an exact product of half-integers given as twice-values.
double root(HalfInt a, HalfInt b) {
  long p = static_cast<long>(a.twice()) * b.twice();
  if (p <= 0) return 0.0;
  return 0.5 * std::sqrt(static_cast<double>(p));
}

CMatrix ladder_matrix(const Basis& basis, int which, bool dotted) {
  // which: +1 raise, -1 lower, 0 diagonal.
  CMatrix out = CMatrix::zero(basis);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const BasisIndex& b = basis[c];
    const HalfInt j = dotted ? b.ldot : b.l, m = dotted ? b.mdot : b.m;
    auto ci = static_cast<Eigen::Index>(c);
    if (which == 0) {
      out(ci, ci) = m.value();
      continue;
    }
    BasisIndex target = b;
    double coeff = 0;
    if (which > 0) {
      if (m >= j) continue;
      coeff = root(j - m, j + m + HalfInt(1));
      (dotted ? target.mdot : target.m) += HalfInt(1);
    } else {
      if (m <= -j) continue;
      coeff = root(j + m, j - m + HalfInt(1));
      (dotted ? target.mdot : target.m) -= HalfInt(1);
    }
    out(out.row_of(target), ci) = coeff;
  }
  return out;
}

void need(const OperatorSet& s, std::initializer_list<K> kinds) {
  for (K k : kinds) s.at(k);
}

double res(const CMatrix& lhs, const CMatrix& rhs) { return max_abs_diff(lhs, rhs); }

// Levi-Civita helpers for triples given as arrays of three matrices.
using Triple = std::array<const CMatrix*, 3>;

void add(CommutatorReport& r, std::string name, double v) { r.relations.push_back({std::move(name), v}); }

void lorentz_table(CommutatorReport& r, const Triple& a, const Triple& b, const std::string& an,
                   const std::string& bn) {
  auto A = [&](int i) -> const CMatrix& { return *a[static_cast<std::size_t>(i - 1)]; };
  auto B = [&](int i) -> const CMatrix& { return *b[static_cast<std::size_t>(i - 1)]; };
  auto nm = [](const std::string& x, int i) { return x + std::to_string(i); };
  auto br = [&](const std::string& x, int i, const std::string& y, int j) {
    return "[" + nm(x, i) + "," + nm(y, j) + "]";
  };
  add(r, br(an, 1, an, 2) + "=" + nm(an, 3), res(commutator(A(1), A(2)), A(3)));
  add(r, br(an, 2, an, 3) + "=" + nm(an, 1), res(commutator(A(2), A(3)), A(1)));
  add(r, br(an, 3, an, 1) + "=" + nm(an, 2), res(commutator(A(3), A(1)), A(2)));
  add(r, br(bn, 1, bn, 2) + "=-" + nm(an, 3), res(commutator(B(1), B(2)), -A(3)));
  add(r, br(bn, 2, bn, 3) + "=-" + nm(an, 1), res(commutator(B(2), B(3)), -A(1)));
  add(r, br(bn, 3, bn, 1) + "=-" + nm(an, 2), res(commutator(B(3), B(1)), -A(2)));
  for (int i = 1; i <= 3; ++i) add(r, br(an, i, bn, i) + "=0", commutator(A(i), B(i)).max_abs());
  add(r, br(an, 1, bn, 2) + "=" + nm(bn, 3), res(commutator(A(1), B(2)), B(3)));
  add(r, br(an, 1, bn, 3) + "=-" + nm(bn, 2), res(commutator(A(1), B(3)), -B(2)));
  add(r, br(an, 2, bn, 3) + "=" + nm(bn, 1), res(commutator(A(2), B(3)), B(1)));
  add(r, br(an, 2, bn, 1) + "=-" + nm(bn, 3), res(commutator(A(2), B(1)), -B(3)));
  add(r, br(an, 3, bn, 1) + "=" + nm(bn, 2), res(commutator(A(3), B(1)), B(2)));
  add(r, br(an, 3, bn, 2) + "=-" + nm(bn, 1), res(commutator(A(3), B(2)), -B(1)));
}

Cartesian anti_hermitian_cartesian(const OperatorSet& s, K plus, K minus, K three) {
  Cartesian c = cartesian(s.at(plus), s.at(minus), s.at(three));
  if (s.convention == Convention::hermitian_ladder) {
    c.k1 = -I * c.k1;
    c.k2 = -I * c.k2;
    c.k3 = -I * c.k3;
  }
  return c;
}

}  // namespace

std::string to_string(OperatorKind k) {
  for (const auto& n : kNames)
    if (n.kind == k) return n.name;
  throw std::domain_error("unknown operator kind");
}

OperatorKind parse_operator_kind(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.name) return n.kind;
  throw std::invalid_argument("unknown operator name '" + name + "'");
}

std::vector<OperatorKind> all_operator_kinds() {
  std::vector<OperatorKind> out;
  for (const auto& n : kNames) out.push_back(n.kind);
  return out;
}

const CMatrix& OperatorSet::at(OperatorKind k) const {
  auto it = ops.find(k);
  if (it == ops.end()) throw std::out_of_range("operator " + to_string(k) + " missing from set");
  return it->second;
}

CMatrix waerden_op(OperatorKind kind, HalfInt l, HalfInt ldot) {
  const Basis basis = enumerate_basis(l, ldot);
  switch (kind) {
    case K::Xp: return ladder_matrix(basis, +1, true);
    case K::Xm: return ladder_matrix(basis, -1, true);
    case K::X3: return ladder_matrix(basis, 0, true);
    case K::Yp: return ladder_matrix(basis, +1, false);
    case K::Ym: return ladder_matrix(basis, -1, false);
    case K::Y3: return ladder_matrix(basis, 0, false);
    default: throw std::domain_error("waerden_op: " + to_string(kind) + " is not an X/Y operator");
  }
}

OperatorSet waerden_set(HalfInt l, HalfInt ldot) {
  OperatorSet s;
  s.convention = Convention::hermitian_ladder;
  for (K k : {K::Xp, K::Xm, K::X3, K::Yp, K::Ym, K::Y3}) s.ops.emplace(k, waerden_op(k, l, ldot));
  return s;
}

CMatrix helicity_ab_op(OperatorKind kind, HalfInt l) {
  const Basis basis = enumerate_basis(l, HalfInt(0));
  // J+ and J- as column actions; alpha^l_m = sqrt((l+m)(l-m+1)).
  const CMatrix jp = ladder_matrix(basis, +1, false), jm = ladder_matrix(basis, -1, false);
  const CMatrix j3 = ladder_matrix(basis, 0, false);
  const CMatrix a1 = (-0.5 * I) * (jm + jp), a2 = cplx(0.5) * (jm - jp), a3 = -I * j3;
  const CMatrix b1 = cplx(0.5) * (jm + jp), b2 = (0.5 * I) * (jm - jp), b3 = j3;
  switch (kind) {
    case K::A1: return a1;
    case K::A2: return a2;
    case K::A3: return a3;
    case K::B1: return b1;
    case K::B2: return b2;
    case K::B3: return b3;
    case K::At1: return (0.5 * I) * (jm + jp);
    case K::At2: return cplx(-0.5) * (jm - jp);
    case K::At3: return I * j3;
    case K::Bt1: return cplx(-0.5) * (jm + jp);
    case K::Bt2: return (-0.5 * I) * (jm - jp);
    case K::Bt3: return -j3;
    default: throw std::domain_error("helicity_ab_op: " + to_string(kind) + " is not an A/B operator");
  }
}

OperatorSet helicity_set(HalfInt l) {
  OperatorSet s;
  for (K k : {K::A1, K::A2, K::A3, K::B1, K::B2, K::B3}) s.ops.emplace(k, helicity_ab_op(k, l));
  return s;
}

OperatorSet helicity_tilde_set(HalfInt l) {
  OperatorSet s;
  for (K k : {K::At1, K::At2, K::At3, K::Bt1, K::Bt2, K::Bt3}) s.ops.emplace(k, helicity_ab_op(k, l));
  return s;
}

cplx gn_coefficient_a(HalfInt l, const GNRepLabel& rep) {
  if (l.twice() == 0) return 0.0;  // only ever multiplies m = 0
  const double lv = l.value();
  return I * rep.l0.value() * rep.l1().value() / (lv * (lv + 1));
}

cplx gn_coefficient_c(HalfInt l, const GNRepLabel& rep) {
  if (l <= rep.l0 || l >= rep.l1()) return 0.0;  // factor l^2 - l0^2 or l^2 - l1^2 vanishes
  const double lv = l.value(), l0 = rep.l0.value(), l1 = rep.l1().value();
  const cplx q = (lv * lv - l0 * l0) * (lv * lv - l1 * l1) / (4 * lv * lv - 1);
  return I / lv * std::sqrt(q);
}

Basis gn_basis(const GNRepLabel& rep) {
  if (rep.l0.twice() < 0 || rep.p < 1) throw std::domain_error("invalid Gel'fand-Naimark label");
  Basis out;
  for (HalfInt l = rep.l0; l < rep.l1(); l += HalfInt(1))
    for (HalfInt m : projections(l)) out.push_back({l, m, HalfInt(0), HalfInt(0), 0});
  return out;
}

CMatrix gn_op(OperatorKind kind, const GNRepLabel& rep) {
  const Basis basis = gn_basis(rep);
  CMatrix out = CMatrix::zero(basis);
  const HalfInt one(1), two(2);
  auto put = [&](HalfInt l, HalfInt m, cplx coeff, std::size_t col) {
    if (coeff == cplx(0)) return;
    if (l < rep.l0 || l >= rep.l1() || abs(m) > l) return;
    out(out.row_of({l, m, HalfInt(0), HalfInt(0), 0}), static_cast<Eigen::Index>(col)) += coeff;
  };
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const HalfInt l = basis[col].l, m = basis[col].m;
    const cplx al = gn_coefficient_a(l, rep), cl = gn_coefficient_c(l, rep), cl1 = gn_coefficient_c(l + one, rep);
    const double md = m.value();
    switch (kind) {
      case K::H3: put(l, m, md, col); break;
      case K::Hp: put(l, m + one, root(l + m + one, l - m), col); break;
      case K::Hm: put(l, m - one, root(l + m, l - m + one), col); break;
      case K::F3:
        put(l - one, m, cl * root(l - m, l + m), col);
        if (m.twice() != 0) put(l, m, -al * md, col);
        put(l + one, m, -cl1 * root(l + one - m, l + one + m), col);
        break;
      case K::Fp:
        put(l - one, m + one, cl * root(l - m, l - m - one), col);
        put(l, m + one, -al * root(l - m, l + m + one), col);
        put(l + one, m + one, cl1 * root(l + m + one, l + m + two), col);
        break;
      case K::Fm:
        put(l - one, m - one, -cl * root(l + m, l + m - one), col);
        put(l, m - one, -al * root(l + m, l - m + one), col);
        put(l + one, m - one, -cl1 * root(l - m + one, l - m + two), col);
        break;
      default: throw std::domain_error("gn_op: " + to_string(kind) + " is not an H/F operator");
    }
  }
  return out;
}

OperatorSet gn_set(const GNRepLabel& rep) {
  OperatorSet s;
  s.convention = Convention::hermitian_ladder;
  for (K k : {K::Hp, K::Hm, K::H3, K::Fp, K::Fm, K::F3}) s.ops.emplace(k, gn_op(k, rep));
  return s;
}

Cartesian cartesian(const CMatrix& plus, const CMatrix& minus, const CMatrix& k3) {
  return {cplx(0.5) * (plus + minus), (-0.5 * I) * (plus - minus), k3};
}

OperatorSet basis_change(const OperatorSet& g) {
  need(g, {K::Hp, K::Hm, K::H3, K::Fp, K::Fm, K::F3});
  const auto& h3 = g.at(K::H3);
  for (K k : {K::Hp, K::Hm, K::Fp, K::Fm, K::F3})
    if (g.at(k).rows() != h3.rows() || g.at(k).cols() != h3.cols())
      throw std::invalid_argument("basis_change: operator dimensions differ");
  OperatorSet s;
  s.convention = Convention::anti_hermitian;
  const cplx h(0.5);
  s.ops.emplace(K::Yp, -h * (g.at(K::Fp) + I * g.at(K::Hp)));
  s.ops.emplace(K::Ym, -h * (g.at(K::Fm) + I * g.at(K::Hm)));
  s.ops.emplace(K::Y3, -h * (g.at(K::F3) + I * g.at(K::H3)));
  s.ops.emplace(K::Xp, h * (g.at(K::Fp) - I * g.at(K::Hp)));
  s.ops.emplace(K::Xm, h * (g.at(K::Fm) - I * g.at(K::Hm)));
  s.ops.emplace(K::X3, h * (g.at(K::F3) - I * g.at(K::H3)));
  const Cartesian x = cartesian(s.at(K::Xp), s.at(K::Xm), s.at(K::X3));
  const Cartesian y = cartesian(s.at(K::Yp), s.at(K::Ym), s.at(K::Y3));
  s.ops.emplace(K::A1, x.k1 + y.k1);
  s.ops.emplace(K::A2, x.k2 + y.k2);
  s.ops.emplace(K::A3, x.k3 + y.k3);
  s.ops.emplace(K::B1, -I * (x.k1 - y.k1));
  s.ops.emplace(K::B2, -I * (x.k2 - y.k2));
  s.ops.emplace(K::B3, -I * (x.k3 - y.k3));
  return s;
}

OperatorSet basis_change_inverse(const OperatorSet& s) {
  need(s, {K::Xp, K::Xm, K::X3, K::Yp, K::Ym, K::Y3});
  // X - Y = F, X + Y = -iH.
  OperatorSet g;
  g.convention = Convention::hermitian_ladder;
  g.ops.emplace(K::Fp, s.at(K::Xp) - s.at(K::Yp));
  g.ops.emplace(K::Fm, s.at(K::Xm) - s.at(K::Ym));
  g.ops.emplace(K::F3, s.at(K::X3) - s.at(K::Y3));
  g.ops.emplace(K::Hp, I * (s.at(K::Xp) + s.at(K::Yp)));
  g.ops.emplace(K::Hm, I * (s.at(K::Xm) + s.at(K::Ym)));
  g.ops.emplace(K::H3, I * (s.at(K::X3) + s.at(K::Y3)));
  return g;
}

OperatorSet anti_hermitian_from_waerden(const OperatorSet& w) {
  need(w, {K::Xp, K::Xm, K::X3, K::Yp, K::Ym, K::Y3});
  OperatorSet s;
  s.convention = Convention::anti_hermitian;
  for (K k : {K::Xp, K::Xm, K::X3, K::Yp, K::Ym, K::Y3})
    s.ops.emplace(k, w.convention == Convention::hermitian_ladder ? -I * w.at(k) : w.at(k));
  const Cartesian x = cartesian(s.at(K::Xp), s.at(K::Xm), s.at(K::X3));
  const Cartesian y = cartesian(s.at(K::Yp), s.at(K::Ym), s.at(K::Y3));
  s.ops.emplace(K::A1, x.k1 + y.k1);
  s.ops.emplace(K::A2, x.k2 + y.k2);
  s.ops.emplace(K::A3, x.k3 + y.k3);
  s.ops.emplace(K::B1, -I * (x.k1 - y.k1));
  s.ops.emplace(K::B2, -I * (x.k2 - y.k2));
  s.ops.emplace(K::B3, -I * (x.k3 - y.k3));
  return s;
}

double CommutatorReport::max_residual() const {
  double m = 0;
  for (const auto& r : relations) m = std::max(m, r.residual);
  return m;
}

CommutatorReport commutator_report(const OperatorSet& s, RelationSet set) {
  CommutatorReport r;
  switch (set) {
    case RelationSet::Com1:
      lorentz_table(r, {&s.at(K::A1), &s.at(K::A2), &s.at(K::A3)}, {&s.at(K::B1), &s.at(K::B2), &s.at(K::B3)},
                    "A", "B");
      break;
    case RelationSet::Com1Tilde:
      lorentz_table(r, {&s.at(K::At1), &s.at(K::At2), &s.at(K::At3)},
                    {&s.at(K::Bt1), &s.at(K::Bt2), &s.at(K::Bt3)}, "At", "Bt");
      break;
    case RelationSet::Com2: {
      const Cartesian x = anti_hermitian_cartesian(s, K::Xp, K::Xm, K::X3);
      const Cartesian y = anti_hermitian_cartesian(s, K::Yp, K::Ym, K::Y3);
      for (const auto& [c, n] : {std::pair{&x, std::string("X")}, std::pair{&y, std::string("Y")}}) {
        add(r, "[" + n + "1," + n + "2]=" + n + "3", res(commutator(c->k1, c->k2), c->k3));
        add(r, "[" + n + "2," + n + "3]=" + n + "1", res(commutator(c->k2, c->k3), c->k1));
        add(r, "[" + n + "3," + n + "1]=" + n + "2", res(commutator(c->k3, c->k1), c->k2));
      }
      const std::array<const CMatrix*, 3> xs{&x.k1, &x.k2, &x.k3}, ys{&y.k1, &y.k2, &y.k3};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          add(r, "[X" + std::to_string(i + 1) + ",Y" + std::to_string(j + 1) + "]=0",
              commutator(*xs[static_cast<std::size_t>(i)], *ys[static_cast<std::size_t>(j)]).max_abs());
      break;
    }
    case RelationSet::Com2TransposedVariant: {
      const Cartesian x = anti_hermitian_cartesian(s, K::Xp, K::Xm, K::X3);
      add(r, "[X2,X1]=X2", res(commutator(x.k2, x.k1), x.k2));
      break;
    }
    case RelationSet::WaerdenConsistency: {
      const bool herm = s.convention == Convention::hermitian_ladder;
      const cplx two_raise = herm ? cplx(2) : -2.0 * I;  // [K+,K-] = two_raise K3
      const cplx shift = herm ? cplx(1) : -I;           // [K3,K+-] = +- shift K+-
      for (const auto& [p, m, t, n] : {std::tuple{K::Xp, K::Xm, K::X3, "X"}, std::tuple{K::Yp, K::Ym, K::Y3, "Y"}}) {
        const std::string nm(n);
        add(r, "[" + nm + "+," + nm + "-]", res(commutator(s.at(p), s.at(m)), two_raise * s.at(t)));
        add(r, "[" + nm + "3," + nm + "+]", res(commutator(s.at(t), s.at(p)), shift * s.at(p)));
        add(r, "[" + nm + "3," + nm + "-]", res(commutator(s.at(t), s.at(m)), -shift * s.at(m)));
      }
      for (K a : {K::Xp, K::Xm, K::X3})
        for (K b : {K::Yp, K::Ym, K::Y3})
          add(r, "[" + to_string(a) + "," + to_string(b) + "]=0", commutator(s.at(a), s.at(b)).max_abs());
      break;
    }
  }
  return r;
}

double commutator_residual(const OperatorSet& ops, RelationSet set) {
  return commutator_report(ops, set).max_residual();
}

}  // namespace lorentz
