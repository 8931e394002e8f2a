#include "lorentz/half_int.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lorentz {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(s, text));
  int num = parse_int(s.substr(0, slash), text);
  int den = parse_int(s.substr(slash + 1), text);
  if (den == 2) return halves(num);
  if (den == 1) return HalfInt(num);
  throw std::invalid_argument("denominator must be 1 or 2: '" + std::string(text) + "'");
}

int HalfInt::as_int() const {
  if (!is_integer()) throw std::domain_error("label " + str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

std::string BasisIndex::str() const {
  std::string s = "(" + l.str() + "," + m.str() + ";" + ldot.str() + "," + mdot.str() + ")";
  if (block != 0) s += "#" + std::to_string(block);
  return s;
}

std::size_t BasisIndexHash::operator()(const BasisIndex& b) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : {b.l.twice(), b.m.twice(), b.ldot.twice(), b.mdot.twice(), b.block}) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<HalfInt> projections(HalfInt j) {
  if (j.twice() < 0) throw std::domain_error("negative spin label " + j.str());
  std::vector<HalfInt> out;
  out.reserve(j.twice() + 1);
  for (int t = j.twice(); t >= -j.twice(); t -= 2) out.push_back(HalfInt::halves(t));
  return out;
}

std::vector<BasisIndex> enumerate_basis(HalfInt l, HalfInt ldot) {
  if (l.twice() < 0 || ldot.twice() < 0)
    throw std::domain_error("negative representation label (" + l.str() + "," + ldot.str() + ")");
  std::vector<BasisIndex> out;
  out.reserve(static_cast<std::size_t>((l.twice() + 1) * (ldot.twice() + 1)));
  for (HalfInt m : projections(l))
    for (HalfInt md : projections(ldot)) out.push_back({l, m, ldot, md, 0});
  return out;
}

GroupPoint GroupPoint::normalized() const {
  constexpr double pi = std::numbers::pi;
  GroupPoint g = *this;
  // theta -> theta mod 2pi; theta in (pi, 2pi) maps to 2pi - theta with phi, psi shifted by pi.
  g.theta = std::fmod(g.theta, 2 * pi);
  if (g.theta < 0) g.theta += 2 * pi;
  if (g.theta > pi) {
    g.theta = 2 * pi - g.theta;
    g.tau = -g.tau;
    g.phi += pi;
    g.psi -= pi;
  }
  g.phi = std::fmod(g.phi, 2 * pi);
  if (g.phi < 0) g.phi += 2 * pi;
  g.psi = std::fmod(g.psi, 4 * pi);
  if (g.psi < -2 * pi) g.psi += 4 * pi;
  if (g.psi >= 2 * pi) g.psi -= 4 * pi;
  return g;
}

}  // namespace lorentz
