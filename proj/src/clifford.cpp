#include "lorentz/clifford.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace lorentz {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint32_t v) { return std::popcount(v); }

// Restriction of a block-diagonal string (identity or sigma3 in front) to summand s.
PauliString restrict_to_summand(const PauliString& p, int s) {
  const int q = p.qubits() - 1;
  const std::uint32_t top = 1u << q;
  if (p.x_bits() & top) throw std::logic_error("generator is not block diagonal");
  std::vector<int> factors(static_cast<std::size_t>(q));
  for (int f = 0; f < q; ++f) {
    const std::uint32_t bit = 1u << (q - 1 - f);
    const bool x = p.x_bits() & bit, z = p.z_bits() & bit;
    factors[static_cast<std::size_t>(f)] = x ? (z ? 2 : 1) : (z ? 3 : 0);
  }
  PauliString out = PauliString::from_factors(factors);
  // from_factors adds one i per sigma2; recover the original phase.
  int sigma2 = 0;
  for (int f : factors) sigma2 += (f == 2);
  out = out.scaled_by_i(p.phase() - sigma2);
  if (s == 1 && (p.z_bits() & top)) out = -out;
  return out;
}

int distinct_monomials(const std::vector<PauliString>& gens) {
  const int n = static_cast<int>(gens.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  const int q = gens.empty() ? 0 : gens.front().qubits();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    PauliString p = PauliString::identity(q);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) p = p * gens[static_cast<std::size_t>(i)];
    seen.insert({p.x_bits(), p.z_bits()});
  }
  return static_cast<int>(seen.size());
}

std::vector<PauliString> even_generators(int m) {
  std::vector<PauliString> out;
  for (int pauli : {1, 2})
    for (int k = 0; k < m; ++k) {
      std::vector<int> f(static_cast<std::size_t>(m), 0);
      for (int j = 0; j < k; ++j) f[static_cast<std::size_t>(j)] = 3;
      f[static_cast<std::size_t>(k)] = pauli;
      out.push_back(PauliString::from_factors(f));
    }
  return out;
}

}  // namespace

PauliString PauliString::identity(int qubits) {
  if (qubits < 0 || qubits > 31) throw std::length_error("PauliString: unsupported qubit count");
  PauliString p;
  p.qubits_ = qubits;
  return p;
}

PauliString PauliString::from_factors(const std::vector<int>& which) {
  PauliString p = identity(static_cast<int>(which.size()));
  for (std::size_t f = 0; f < which.size(); ++f) {
    const std::uint32_t bit = 1u << (which.size() - 1 - f);
    switch (which[f]) {
      case 0: break;
      case 1: p.x_ |= bit; break;
      case 2:
        p.x_ |= bit;
        p.z_ |= bit;
        p.phase_ = (p.phase_ + 1) % 4;
        break;
      case 3: p.z_ |= bit; break;
      default: throw std::invalid_argument("PauliString: factor must be 0..3");
    }
  }
  return p;
}

PauliString PauliString::operator*(const PauliString& o) const {
  if (qubits_ != o.qubits_) throw std::invalid_argument("PauliString: size mismatch");
  PauliString p;
  p.qubits_ = qubits_;
  p.x_ = x_ ^ o.x_;
  p.z_ = z_ ^ o.z_;
  p.phase_ = (phase_ + o.phase_ + 2 * popcount(z_ & o.x_)) % 4;
  return p;
}

PauliString PauliString::operator-() const { return scaled_by_i(2); }

PauliString PauliString::scaled_by_i(int power) const {
  PauliString p = *this;
  p.phase_ = (((p.phase_ + power) % 4) + 4) % 4;
  return p;
}

PauliString PauliString::prepend(int which) const {
  if (which != 0 && which != 3) throw std::invalid_argument("prepend: only identity or sigma3");
  PauliString p = *this;
  p.qubits_ = qubits_ + 1;
  if (which == 3) p.z_ |= 1u << qubits_;
  return p;
}

MatrixXc PauliString::dense() const {
  const int dim = 1 << qubits_;
  MatrixXc m = MatrixXc::Zero(dim, dim);
  for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(dim); ++b) {
    const double sign = (popcount(z_ & b) % 2) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ x_), static_cast<Eigen::Index>(b)) = sign * kIPow[phase_];
  }
  return m;
}

std::string PauliString::str() const {
  static const char* phases[4] = {"+", "+i", "-", "-i"};
  std::string s = phases[phase_];
  for (int f = 0; f < qubits_; ++f) {
    const std::uint32_t bit = 1u << (qubits_ - 1 - f);
    const bool x = x_ & bit, z = z_ & bit;
    s += x ? (z ? "XZ" : "X") : (z ? "Z" : "I");
    if (f + 1 < qubits_) s += ".";
  }
  return s;
}

std::vector<PauliString> CliffordBasis::summand(int s) const {
  if (n % 2 == 0) throw std::logic_error("summand: only defined for odd n");
  std::vector<PauliString> out;
  for (const auto& g : generators) out.push_back(restrict_to_summand(g, s));
  return out;
}

CliffordBasis brauer_weyl(int n) {
  if (n < 1 || n > 20) throw std::length_error("brauer_weyl: n must lie in [1, 20]");
  CliffordBasis b;
  b.n = n;
  const int m = n / 2;
  b.generators = even_generators(m);
  if (n % 2 == 1) {
    for (auto& g : b.generators) g = g.prepend(0);
    PauliString last = PauliString::from_factors(std::vector<int>(static_cast<std::size_t>(m), 3));
    b.generators.push_back(last.prepend(3));
  }
  return b;
}

CliffordReport verify_clifford(const CliffordBasis& basis) {
  CliffordReport r;
  const auto& g = basis.generators;
  const int q = g.empty() ? 0 : g.front().qubits();
  const PauliString id = PauliString::identity(q);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) {
      const bool ok = i == j ? (g[i] * g[i] == id) : (g[i] * g[j] == -(g[j] * g[i]));
      if (!ok) {
        r.passed = false;
        r.failures.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      }
    }
  const int m = basis.n / 2;
  if (basis.n % 2 == 0) {
    r.span_dimensions.push_back(distinct_monomials(g));
    r.expected_span.push_back(1 << (2 * m));
  } else {
    for (int s = 0; s < 2; ++s) {
      r.span_dimensions.push_back(distinct_monomials(basis.summand(s)));
      r.expected_span.push_back(1 << (2 * m));
    }
  }
  for (std::size_t k = 0; k < r.span_dimensions.size(); ++k)
    if (r.span_dimensions[k] != r.expected_span[k]) r.passed = false;
  return r;
}

OddDirectSumReport odd_direct_sum(int m, int samples, unsigned seed) {
  if (m < 1 || m > 5) throw std::length_error("odd_direct_sum: m must lie in [1, 5]");
  OddDirectSumReport r;
  r.m = m;
  r.summand_size = 1 << m;
  const CliffordBasis basis = brauer_weyl(2 * m + 1);
  const auto& g = basis.generators;
  for (int s = 0; s < 2; ++s) r.span_dimensions.push_back(distinct_monomials(basis.summand(s)));

  PauliString omega = PauliString::identity(m + 1);
  for (const auto& e : g) omega = omega * e;
  r.volume_central = true;
  for (const auto& e : g)
    if (!(omega * e == e * omega)) r.volume_central = false;
  for (int s = 0; s < 2; ++s) {
    PauliString w = restrict_to_summand(omega, s);
    r.volume_scalars.push_back(w.x_bits() == 0 && w.z_bits() == 0 ? kIPow[w.phase()] : cplx(std::nan("")));
  }
  const std::uint32_t top = 1u << m;
  r.summands_commute = true;
  for (const auto& e : g)
    if (e.x_bits() & top) r.summands_commute = false;

  // Random elements: complex combinations of random generator words.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.size()) - 1), len(0, 4);
  std::normal_distribution<double> coef(0.0, 1.0);
  const int d = 1 << (m + 1), h = 1 << m;
  auto random_element = [&] {
    MatrixXc a = MatrixXc::Zero(d, d);
    for (int t = 0; t < 4; ++t) {
      PauliString w = PauliString::identity(m + 1);
      for (int k = len(rng); k > 0; --k) w = w * g[static_cast<std::size_t>(pick(rng))];
      const double re = coef(rng), im = coef(rng);
      a += cplx(re, im) * w.dense();
    }
    return a;
  };
  auto select = [&](const MatrixXc& a) -> MatrixXc { return a.topLeftCorner(h, h); };
  for (int t = 0; t < samples; ++t) {
    const MatrixXc a = random_element(), b = random_element();
    const double scale = std::max(1.0, select(a).norm() * select(b).norm());
    r.algebra_map_residual = std::max(r.algebra_map_residual, (select(a * b) - select(a) * select(b)).cwiseAbs().maxCoeff() / scale);
  }
  r.random_products = samples;
  r.passed = r.volume_central && r.summands_commute && r.span_dimensions[0] == (1 << (2 * m)) &&
             r.span_dimensions[1] == (1 << (2 * m)) && r.algebra_map_residual <= 1e-12 &&
             std::abs(r.volume_scalars[0] + r.volume_scalars[1]) <= 1e-15;
  return r;
}

SchurCoverGens schur_transpositions(int m) {
  if (m < 2 || m > 10) throw std::length_error("schur_transpositions: m must lie in [2, 10]");
  const CliffordBasis basis = brauer_weyl(m);
  SchurCoverGens s;
  s.m = m;
  for (int k = 1; k <= m; ++k) {
    const double a = std::sqrt((k - 1.0) / (2.0 * k)), b = std::sqrt((k + 1.0) / (2.0 * k));
    MatrixXc t = -b * basis.generators[static_cast<std::size_t>(k - 1)].dense();
    if (k > 1) t += a * basis.generators[static_cast<std::size_t>(k - 2)].dense();
    s.t.push_back(t);
  }
  return s;
}

namespace {

struct ScalarFit {
  cplx value;
  double deviation;
};

ScalarFit scalar_part(const MatrixXc& m) {
  const cplx s = m.trace() / static_cast<double>(m.rows());
  const MatrixXc id = MatrixXc::Identity(m.rows(), m.cols());
  return {s, (m - s * id).cwiseAbs().maxCoeff()};
}

// s with a = s b, fitted by least squares.
ScalarFit ratio(const MatrixXc& a, const MatrixXc& b) {
  const cplx s = (b.adjoint() * a).trace() / (b.adjoint() * b).trace();
  return {s, (a - s * b).cwiseAbs().maxCoeff()};
}

void record(std::optional<cplx>& slot, const ScalarFit& f, const std::string& what, SchurReport& r) {
  constexpr double tol = 1e-12;
  r.max_deviation = std::max(r.max_deviation, f.deviation);
  if (f.deviation > tol) {
    r.scalar_classes = false;
    r.failures.push_back(what + " is not scalar");
    return;
  }
  if (!slot) {
    slot = f.value;
  } else if (std::abs(*slot - f.value) > tol) {
    r.scalar_classes = false;
    r.failures.push_back(what + " disagrees with the rest of its class");
  }
}

void relations(const std::vector<MatrixXc>& t, SchurReport& r, std::optional<cplx>& s1, std::optional<cplx>& s2,
               std::optional<cplx>& s3, const std::string& tag) {
  const std::size_t m = t.size();
  for (std::size_t k = 0; k < m; ++k) record(s1, scalar_part(t[k] * t[k]), tag + "t" + std::to_string(k + 1) + "^2", r);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const MatrixXc p = t[j] * t[j + 1];
    record(s2, scalar_part(p * p * p), tag + "(t" + std::to_string(j + 1) + "t" + std::to_string(j + 2) + ")^3", r);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = k + 2; l < m; ++l)
      record(s3, ratio(t[k] * t[l], t[l] * t[k]), tag + "t" + std::to_string(k + 1) + "t" + std::to_string(l + 1), r);
}

bool homomorphism_check(const std::vector<MatrixXc>& t) {
  const int m = static_cast<int>(t.size());
  const int d = static_cast<int>(t.front().rows());
  std::map<std::vector<int>, MatrixXc> rep;
  std::vector<std::pair<std::vector<int>, MatrixXc>> frontier{{{}, MatrixXc::Identity(d, d)}};
  std::vector<int> id(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) id[static_cast<std::size_t>(i)] = i;
  frontier.front().first = id;
  rep[id] = frontier.front().second;
  for (int length = 1; length <= 4; ++length) {
    std::vector<std::pair<std::vector<int>, MatrixXc>> next;
    for (const auto& [perm, mat] : frontier)
      for (int k = 0; k < m; ++k) {
        std::vector<int> p = perm;
        std::swap(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k) + 1]);
        MatrixXc w = mat * t[static_cast<std::size_t>(k)];
        auto it = rep.find(p);
        if (it == rep.end()) {
          rep.emplace(p, w);
        } else {
          const ScalarFit f = ratio(w, it->second);
          if (f.deviation > 1e-10 || std::abs(std::abs(f.value) - 1.0) > 1e-10 || std::abs(f.value.imag()) > 1e-10)
            return false;
        }
        next.push_back({p, w});
      }
    frontier = std::move(next);
  }
  // Distinct permutations must not collapse to the same matrix up to sign.
  for (auto a = rep.begin(); a != rep.end(); ++a)
    for (auto b = std::next(a); b != rep.end(); ++b) {
      const ScalarFit f = ratio(a->second, b->second);
      if (f.deviation < 1e-8) return false;
    }
  return true;
}

}  // namespace

SchurReport verify_tn_relations(const SchurCoverGens& gens) {
  SchurReport r;
  relations(gens.t, r, r.s1, r.s2, r.s3, "");
  std::vector<MatrixXc> twisted;
  for (const auto& t : gens.t) twisted.push_back(cplx(0, 1) * t);
  SchurReport scratch;
  relations(twisted, scratch, r.twisted_s1, r.twisted_s2, r.twisted_s3, "i*");
  for (const auto& t : gens.t) {
    const MatrixXc id = MatrixXc::Identity(t.rows(), t.cols());
    if ((t * t.adjoint() - id).cwiseAbs().maxCoeff() > 1e-12 || std::abs(t.trace()) > 1e-12) r.unitary_traceless = false;
  }
  if (gens.m <= 5) r.homomorphism = homomorphism_check(gens.t);
  return r;
}

}  // namespace lorentz
