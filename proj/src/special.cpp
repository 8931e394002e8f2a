#include "lorentz/special.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lorentz {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::uint64_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

// Number of terms before a terminating series stops, or -1.
int truncation(std::initializer_list<double> uppers) {
  int n = -1;
  for (double a : uppers)
    if (is_nonpositive_integer(a)) {
      int k = static_cast<int>(std::lround(-a));
      if (n < 0 || k < n) n = k;
    }
  return n;
}

void check_lower(double b, int n, const char* what) {
  // (b)_k for k <= n touches b, b+1, ..., b+n-1.
  for (int k = 0; k < n; ++k)
    if (std::abs(b + k) < 1e-12)
      throw std::domain_error(std::string(what) + ": lower parameter " + std::to_string(b) +
                              " produces a pole before termination");
}

}  // namespace

bool is_nonpositive_integer(double v) { return v <= 1e-12 && std::abs(v - std::round(v)) < 1e-12; }

double ln_factorial(int n) {
  if (n < 0) throw std::domain_error("ln_factorial of negative argument " + std::to_string(n));
  if (n <= 20) return std::log(static_cast<double>(kFactorials[static_cast<std::size_t>(n)]));
  return std::lgamma(n + 1.0);
}

double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative argument " + std::to_string(n));
  if (n <= 20) return static_cast<double>(kFactorials[static_cast<std::size_t>(n)]);
  return std::exp(std::lgamma(n + 1.0));
}

double inv_gamma_int(int n) { return n <= 0 ? 0.0 : 1.0 / factorial(n - 1); }

cplx hyp2f1_term(double a, double b, double c, cplx x) {
  int n = truncation({a, b});
  if (n < 0)
    throw std::domain_error("hyp2f1_term: non-terminating parameters a=" + std::to_string(a) +
                            ", b=" + std::to_string(b));
  check_lower(c, n, "hyp2f1_term");
  CompensatedSum<cplx> sum;
  cplx term = 1.0;
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum.add(term);
  }
  return sum.value();
}

double hyp3f2_unit(double a1, double a2, double a3, double b1, double b2) {
  int n = truncation({a1, a2, a3});
  if (n < 0) throw std::domain_error("hyp3f2_unit: non-terminating parameters");
  check_lower(b1, n, "hyp3f2_unit");
  check_lower(b2, n, "hyp3f2_unit");
  CompensatedSum<double> sum;
  double term = 1.0;
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (a1 + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (k + 1.0));
    sum.add(term);
  }
  return sum.value();
}

}  // namespace lorentz
