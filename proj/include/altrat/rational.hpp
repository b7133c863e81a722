#ifndef ALTRAT_RATIONAL_HPP_
#define ALTRAT_RATIONAL_HPP_

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "altrat/error.hpp"
#include "altrat/jacobi.hpp"
#include "altrat/params.hpp"
#include "altrat/special.hpp"

namespace altrat {

/// Largest order accepted by the coefficient constructors (double accuracy is only claimed to n = 12).
inline constexpr int kMaxOrder = 30;

/**
 * @brief R_nk represented exactly as sum_{j=k..n} c_j x^{-j}.
 *
 * coeffs[i] multiplies x^{-(k+i)}.
 */
template <typename Real = double>
struct RationalCoeffs {
  int n = 0;
  int k = 0;
  ParamPair params;
  std::vector<Real> coeffs;

  /// c_j, zero for j outside [k, n].
  Real at(int j) const {
    if (j < k || j > n) return Real(0);
    return coeffs[static_cast<std::size_t>(j - k)];
  }

  Real limit_at_infinity() const { return k == 0 ? coeffs.front() : Real(0); }

  RationalCoeffs& operator*=(const Real& s) {
    for (auto& c : coeffs) c *= s;
    return *this;
  }
};

namespace detail {

inline void check_indices(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("indices must satisfy 0 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  if (n > kMaxOrder) {
    throw DomainError("order n=" + std::to_string(n) + " exceeds the supported maximum " +
                      std::to_string(kMaxOrder));
  }
}

/**
 * Leibniz expansion of
 *   (-1)^m x^{n-g} (x-1)^{-b} / m! * D^m [ x^{g-n-k} (x-1)^{b+m} ],  m = n-k,
 * followed by (x-1)^i x^{-i} = (1 - 1/x)^i. Purely algebraic, so it is
 * defined for every real (gamma, beta); identities that reference shifted
 * parameters outside the valid domain are evaluated through this.
 */
template <typename Real>
RationalCoeffs<Real> rodrigues_expansion(int n, int k, double gamma, double beta) {
  check_indices(n, k);
  const int m = n - k;
  const Real a = Real(gamma) - Real(n + k);
  const Real b = Real(beta) + Real(m);
  RationalCoeffs<Real> out;
  out.n = n;
  out.k = k;
  out.params = classify_params(gamma, beta);
  out.coeffs.assign(static_cast<std::size_t>(m + 1), Real(0));
  for (int i = 0; i <= m; ++i) {
    const Real term = binomial<Real>(m, i) * falling_factorial(a, m - i) * falling_factorial(b, i);
    for (int s = 0; s <= m - i; ++s) {
      const Real c = binomial<Real>(m - i, s) * term;
      if (s % 2 == 0) {
        out.coeffs[s] += c;
      } else {
        out.coeffs[s] -= c;
      }
    }
  }
  const Real scale = (m % 2 == 0 ? Real(1) : Real(-1)) / factorial<Real>(m);
  for (auto& c : out.coeffs) c *= scale;
  if (m == 0) out.coeffs[0] = Real(1);
  return out;
}

/// r_nk from its Gamma-ratio closed form; NaN where a Gamma argument is not positive.
template <typename Real>
Real norm_formula(int n, int k, double gamma, double beta) {
  const Real g(gamma), b(beta);
  const Real lead = Real(2 * k) - g - b - 1;
  const Real a1 = Real(n + k) - g - b;
  const Real a2 = Real(n + k) - g;
  const Real a3 = Real(n - k) + b + 1;
  if (!(a1 > 0) || !(a2 > 0) || !(a3 > 0) || lead == 0) {
    return Real(std::numeric_limits<double>::quiet_NaN());
  }
  using std::exp;
  return Real(exp(log_gamma(a1) - log_gamma(a2) + log_gamma(a3) - log_gamma(Real(n - k + 1)))) /
         lead;
}

}  // namespace detail

/// Canonical R_nk^(gamma,beta) coefficients from the Rodrigues formula.
template <typename Real = double>
RationalCoeffs<Real> rodrigues_coeffs(int n, int k, const ParamPair& params) {
  require_valid(params);
  auto out = detail::rodrigues_expansion<Real>(n, k, params.gamma, params.beta);
  out.params = params;
  return out;
}

/**
 * @brief d^order/dx^order of sum c_j x^{-j} at x (order 0, 1 or 2).
 *
 * Horner in t = 1/x; x = +inf yields the limit (c_0 for k = 0, else 0).
 */
template <typename Real>
Real eval_derivative(const RationalCoeffs<Real>& r, const Real& x, int order) {
  if (x == 0) throw DomainError("rational functions are not defined at x = 0");
  if (order < 0 || order > 2) throw DomainError("derivative order must be 0, 1 or 2");
  const Real t = Real(1) / x;
  // d^o/dx^o x^{-j} = (-1)^o j (j+1)..(j+o-1) x^{-(j+o)}
  Real s(0);
  for (int j = r.n; j >= r.k; --j) {
    Real factor(1);
    for (int q = 0; q < order; ++q) factor *= Real(j + q);
    s = s * t + factor * r.at(j);
  }
  Real tp(1);
  for (int q = 0; q < r.k + order; ++q) tp *= t;
  s *= tp;
  return order % 2 == 0 ? s : Real(-s);
}

template <typename Real>
Real eval(const RationalCoeffs<Real>& r, const Real& x) {
  return eval_derivative(r, x, 0);
}

/// sum |d^order/dx^order (c_j x^{-j})|: the scale against which evaluation error is measured.
template <typename Real>
Real eval_magnitude(const RationalCoeffs<Real>& r, const Real& x, int order = 0) {
  using std::abs;
  const Real t = Real(1) / abs(x);
  Real s(0);
  for (int j = r.n; j >= r.k; --j) {
    Real factor(1);
    for (int q = 0; q < order; ++q) factor *= Real(j + q);
    s = s * t + factor * abs(r.at(j));
  }
  Real tp(1);
  for (int q = 0; q < r.k + order; ++q) tp *= t;
  return s * tp;
}

inline double derivative_eval(int n, int k, const ParamPair& params, double x) {
  return eval_derivative(rodrigues_coeffs<double>(n, k, params), x, 1);
}

/**
 * @brief R_nk(x) without the monomial sum.
 *
 * x^k R_nk is the degree m = n-k shifted Jacobi polynomial in t = 1/x for
 * t^{2k-gamma-beta-1}(1-t)^beta, with value (-1)^m (beta+m)_m / m! at t = 1.
 * The monic recurrence at t and at 1 avoids the cancellation of large
 * alternating c_j; x = +inf gives the limit.
 */
template <typename Real = double>
Real jacobi_eval(int n, int k, const ParamPair& params, const Real& x) {
  require_valid(params);
  detail::check_indices(n, k);
  if (!(x >= 1)) throw DomainError("jacobi_eval: x must be >= 1");
  using std::isinf;
  const bool at_inf = isinf(static_cast<double>(x));
  if (at_inf && k > 0) return Real(0);
  const Real t = at_inf ? Real(0) : Real(1) / x;
  const int m = n - k;
  const Real end = falling_factorial(Real(Real(params.beta) + Real(m)), m) / factorial<Real>(m);
  Real q(1);
  if (m > 0) {
    const ShiftedJacobi<Real> rec(Real(2 * k - 1) - Real(params.gamma) - Real(params.beta), Real(params.beta));
    Real p_prev(0), p(1), e_prev(0), e(1);
    for (int j = 0; j < m; ++j) {
      const Real d = rec.diag(j);
      const Real o = j > 0 ? rec.offdiag_sq(j) : Real(0);
      const Real p_next = (t - d) * p - o * p_prev;
      const Real e_next = (1 - d) * e - o * e_prev;
      p_prev = p;
      p = p_next;
      e_prev = e;
      e = e_next;
    }
    q = p / e;
  }
  Real tk(1);
  for (int i = 0; i < k; ++i) tk *= t;
  return (m % 2 == 0 ? end : Real(-end)) * q * tk;
}

/// Weighted moment int_1^inf x^{-j} (x-1)^beta x^gamma dx = B(beta+1, j-gamma-beta-1).
template <typename Real = double>
Real moment(int j, const ParamPair& params) {
  const Real second = Real(j) - Real(params.gamma) - Real(params.beta) - 1;
  if (!(second > 0)) {
    throw DivergenceError("moment of x^-" + std::to_string(j) + " diverges for gamma+beta=" +
                          std::to_string(params.gamma + params.beta));
  }
  return beta(Real(Real(params.beta) + 1), second);
}

/// Squared weighted norm r_nk = int (x-1)^beta x^gamma R_nk^2 dx.
template <typename Real = double>
Real norm(int n, int k, const ParamPair& params) {
  require_valid(params);
  detail::check_indices(n, k);
  if (k == 0 && params.cls != ParamClass::Interior) {
    throw DivergenceError("R_n0 is non-normalizable for marginal parameters (gamma+beta >= -1)");
  }
  return detail::norm_formula<Real>(n, k, params.gamma, params.beta);
}

/// int_1^inf (x-1)^beta x^gamma R_nk dx from its Gamma-ratio closed form.
template <typename Real = double>
Real weight_integral(int n, int k, const ParamPair& params) {
  require_valid(params);
  detail::check_indices(n, k);
  const Real g(params.gamma), b(params.beta);
  const Real first = Real(k) - g - b - 1;
  if (!(first > 0)) {
    throw DivergenceError("weight integral of R_n" + std::to_string(k) +
                          " diverges (k - gamma - beta - 1 <= 0)");
  }
  using std::exp;
  return Real(exp(log_gamma(first) - log_gamma(Real(k + 1)) + log_gamma(Real(b + Real(n - k + 1))) -
                  log_gamma(Real(n - k + 1)) + log_gamma(Real(n + 1)) -
                  log_gamma(Real(Real(n) - g))));
}

/**
 * @brief Exact weighted inner product on [1, inf):
 *   <f, g> = sum_j sum_l f_j g_l B(beta+1, j+l-gamma-beta-1).
 *
 * No quadrature is involved. The sum cancels heavily for large n; instantiate
 * with an extended-precision Real when an accurate value is required.
 */
template <typename Real>
Real inner_product_oracle(const RationalCoeffs<Real>& f, const RationalCoeffs<Real>& g,
                          const ParamPair& params) {
  const int jmax = f.n + g.n;
  std::vector<std::optional<Real>> cache(static_cast<std::size_t>(jmax + 1));
  Real sum(0);
  for (int j = f.k; j <= f.n; ++j) {
    const Real fj = f.at(j);
    if (fj == 0) continue;
    for (int l = g.k; l <= g.n; ++l) {
      const Real gl = g.at(l);
      if (gl == 0) continue;
      auto& m = cache[static_cast<std::size_t>(j + l)];
      if (!m) {
        try {
          m = moment<Real>(j + l, params);
        } catch (const DivergenceError&) {
          throw DivergenceError("inner product diverges at term (j=" + std::to_string(j) +
                                ", l=" + std::to_string(l) + ")");
        }
      }
      sum += fj * gl * *m;
    }
  }
  return sum;
}

/// Exact int (x-1)^beta x^gamma f dx for f in the x^{-j} basis.
template <typename Real>
Real weighted_integral_oracle(const RationalCoeffs<Real>& f, const ParamPair& params) {
  Real sum(0);
  for (int j = f.k; j <= f.n; ++j) {
    if (f.at(j) != 0) sum += f.at(j) * moment<Real>(j, params);
  }
  return sum;
}

/// Whether int_1^inf f^2 dx (unit weight) converges: the slowest term x^{-2j} needs 2j > 1.
template <typename Real>
bool square_integrable(const RationalCoeffs<Real>& f) {
  for (int j = f.k; j <= f.n; ++j) {
    if (f.at(j) != 0) return 2 * j > 1;
  }
  return true;  // identically zero
}

/**
 * @brief Direct-orthogonalization function x^{-n} P(1/x), k >= n, where P is the
 * monic shifted Jacobi polynomial of degree k-n for t^{alpha+2n}(1-t)^beta.
 */
inline double direct_rational_eval(int n, int k, const ParamPair& params, double x) {
  require_valid(params);
  if (n < 0 || k < n) throw DomainError("direct functions need 0 <= n <= k");
  if (x == 0) throw DomainError("rational functions are not defined at x = 0");
  const double t = 1.0 / x;
  const double lead = std::pow(t, n);
  if (k == n) return lead;
  const double a = params.alpha() + 2 * n;
  if (!(a > -1)) {
    throw DomainError("direct system needs alpha+2n = -gamma-beta-2+2n > -1");
  }
  return lead * eval_polynomial(shifted_jacobi_monic<double>(k - n, a, params.beta), t);
}

/// Both sides of R_{n+p,k+p}^(gamma+2p,beta)(x) = x^{-p} R_nk^(gamma,beta)(x) plus the norm pair.
struct InvarianceCheck {
  double shifted_value = 0;
  double scaled_value = 0;
  std::optional<double> shifted_norm;
  std::optional<double> original_norm;
};

inline InvarianceCheck invariance_shift(int n, int k, const ParamPair& params, int p, double x) {
  require_valid(params);
  if (p < 1) throw DomainError("invariance shift p must be a positive integer");
  const auto original = rodrigues_coeffs<double>(n, k, params);
  const auto shifted =
      detail::rodrigues_expansion<double>(n + p, k + p, params.gamma + 2 * p, params.beta);
  InvarianceCheck out;
  out.shifted_value = eval(shifted, x);
  out.scaled_value = std::pow(x, -p) * eval(original, x);
  if (k >= 1 || params.cls == ParamClass::Interior) {
    out.original_norm = norm<double>(n, k, params);
    const double s = detail::norm_formula<double>(n + p, k + p, params.gamma + 2 * p, params.beta);
    if (!std::isnan(s)) out.shifted_norm = s;
  }
  return out;
}

}  // namespace altrat

#endif  // ALTRAT_RATIONAL_HPP_
