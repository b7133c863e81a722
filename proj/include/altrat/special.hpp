#ifndef ALTRAT_SPECIAL_HPP_
#define ALTRAT_SPECIAL_HPP_

#include <cmath>
#include <string>

#include "altrat/error.hpp"

namespace altrat {

/**
 * @brief Natural logarithm of the Gamma function for positive arguments.
 *
 * Works for any scalar type that provides an ADL-visible (or std::) lgamma,
 * e.g. double, long double or boost::multiprecision floats.
 */
template <typename Real>
Real log_gamma(const Real& x) {
  if (!(x > 0)) {
    throw DomainError("log_gamma: argument must be positive");
  }
  using std::lgamma;
  return Real(lgamma(x));
}

/// Euler Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), evaluated through log_gamma.
template <typename Real>
Real beta(const Real& a, const Real& b) {
  if (!(a > 0) || !(b > 0)) {
    throw DomainError("beta: both arguments must be positive");
  }
  using std::exp;
  return Real(exp(log_gamma(a) + log_gamma(b) - log_gamma(Real(a + b))));
}

/// Gamma(a)/Gamma(b) for positive a, b.
template <typename Real>
Real gamma_ratio(const Real& a, const Real& b) {
  using std::exp;
  return Real(exp(log_gamma(a) - log_gamma(b)));
}

/// m!! with (-1)!! = 0!! = 1.
template <typename Real = double>
Real double_factorial(int m) {
  if (m < -1) {
    throw DomainError("double_factorial: m must be >= -1, got " + std::to_string(m));
  }
  Real result(1);
  for (int i = m; i > 1; i -= 2) result *= Real(i);
  return result;
}

/// Falling factorial a(a-1)...(a-m+1); the empty product (m = 0) is 1.
template <typename Real>
Real falling_factorial(const Real& a, int m) {
  if (m < 0) {
    throw DomainError("falling_factorial: m must be nonnegative");
  }
  Real result(1);
  for (int i = 0; i < m; ++i) result *= Real(a - Real(i));
  return result;
}

template <typename Real = double>
Real factorial(int m) {
  if (m < 0) throw DomainError("factorial: m must be nonnegative");
  Real result(1);
  for (int i = 2; i <= m; ++i) result *= Real(i);
  return result;
}

/// Binomial coefficient C(n, k) for 0 <= k <= n; zero outside that range.
template <typename Real = double>
Real binomial(int n, int k) {
  if (k < 0 || k > n) return Real(0);
  if (k > n - k) k = n - k;
  Real result(1);
  for (int i = 1; i <= k; ++i) {
    result *= Real(n - k + i);
    result /= Real(i);
  }
  return result;
}

}  // namespace altrat

#endif  // ALTRAT_SPECIAL_HPP_
