#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lorentz {

// Exact half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt halves(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  // Accepts "3/2", "-1/2", "2", "4/2". Throws std::invalid_argument.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }
  // Integer value; throws std::domain_error when the label is half-odd.
  int as_int() const;

  std::string str() const;

  constexpr HalfInt operator+(HalfInt o) const { return halves(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return halves(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return halves(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::halves(1);

HalfInt abs(HalfInt h);

// Basis label |l, m; ldot, mdot>. `block` distinguishes copies inside a direct sum.
struct BasisIndex {
  HalfInt l, m, ldot, mdot;
  int block = 0;

  auto operator<=>(const BasisIndex&) const = default;
  std::string str() const;
};

struct BasisIndexHash {
  std::size_t operator()(const BasisIndex& b) const noexcept;
};

// Ordered basis of the (l, ldot) carrier: m descending, then mdot descending.
std::vector<BasisIndex> enumerate_basis(HalfInt l, HalfInt ldot);

// Range of projections j, j-1, ..., -j.
std::vector<HalfInt> projections(HalfInt j);

// Six real parameters of a complexified rotation.
struct GroupPoint {
  double phi = 0, eps = 0, theta = 0, tau = 0, psi = 0, veps = 0;

  // Point with phases conjugated: (g^dagger)^{-1}.
  GroupPoint conjugated() const { return {phi, -eps, theta, -tau, psi, -veps}; }
  // Brings theta into [0, pi], phi into [0, 2pi), psi into [-2pi, 2pi).
  // The fundamental matrix is preserved up to an overall sign.
  GroupPoint normalized() const;
};

}  // namespace lorentz
