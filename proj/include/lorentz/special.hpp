#pragma once

#include <complex>

namespace lorentz {

using cplx = std::complex<double>;

// Kahan-Babuska-Neumaier accumulator.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

// ln(n!). Exact product for n <= 20, log-gamma beyond. Throws std::domain_error for n < 0.
double ln_factorial(int n);

// n! as a double. Exact for n <= 20.
double factorial(int n);

// 1/Gamma(n) for integer n; zero at the poles n <= 0.
double inv_gamma_int(int n);

// True when v is a non-positive integer (to within 1e-12).
bool is_nonpositive_integer(double v);

// Terminating 2F1(a, b; c; x). Throws std::domain_error when neither a nor b
// is a non-positive integer, or when (c)_k vanishes before termination.
cplx hyp2f1_term(double a, double b, double c, cplx x);

// Terminating 3F2(a1, a2, a3; b1, b2; 1), same error contract.
double hyp3f2_unit(double a1, double a2, double a3, double b1, double b2);

}  // namespace lorentz
