#ifndef ALTRAT_JACOBI_HPP_
#define ALTRAT_JACOBI_HPP_

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "altrat/error.hpp"
#include "altrat/special.hpp"

namespace altrat {

/**
 * @brief Monic three-term recurrence of the Jacobi polynomials on [0,1]
 * orthogonal with respect to t^a (1-t)^b.
 *
 *   p_{j+1}(t) = (t - diag(j)) p_j(t) - offdiag_sq(j) p_{j-1}(t),
 *
 * with offdiag_sq(0) = mu0 = B(a+1, b+1). The coefficients are the classical
 * closed forms of the [-1,1] Jacobi recurrence with the roles of the exponents
 * swapped (t = (1+x)/2), scaled to [0,1].
 */
template <typename Real = double>
class ShiftedJacobi {
 public:
  ShiftedJacobi(Real a, Real b) : a_(a), b_(b) {
    if (!(a > -1) || !(b > -1)) {
      throw DomainError("shifted Jacobi exponents must both be > -1");
    }
    mu0_ = beta(Real(a + 1), Real(b + 1));
  }

  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  /// Total mass of the weight, B(a+1, b+1).
  const Real& mu0() const { return mu0_; }

  Real diag(int j) const {
    // [-1,1] parameters: (1-x)^al (1+x)^be with al = b, be = a.
    const Real al = b_, be = a_;
    const Real s = al + be;
    Real ax;
    if (j == 0) {
      ax = (be - al) / (s + 2);
    } else {
      const Real d = 2 * Real(j) + s;
      ax = (be * be - al * al) / (d * (d + 2));
    }
    return (1 + ax) / 2;
  }

  Real offdiag_sq(int j) const {
    if (j == 0) return mu0_;
    const Real al = b_, be = a_;
    const Real s = al + be;
    Real bx;
    if (j == 1) {
      bx = 4 * (1 + al) * (1 + be) / ((2 + s) * (2 + s) * (3 + s));
    } else {
      const Real jj(j);
      const Real d = 2 * jj + s;
      bx = 4 * jj * (jj + al) * (jj + be) * (jj + s) / (d * d * (d + 1) * (d - 1));
    }
    return bx / 4;
  }

  /// Orthonormal p_m(t) and its derivative.
  std::pair<Real, Real> orthonormal_with_derivative(int m, const Real& t) const {
    using std::sqrt;
    Real prev(0), dprev(0);
    Real cur = 1 / sqrt(mu0_), dcur(0);
    Real scale_prev(0);  // sqrt(offdiag_sq(j)) for the previous step
    for (int j = 0; j < m; ++j) {
      const Real s_next = sqrt(offdiag_sq(j + 1));
      const Real next = ((t - diag(j)) * cur - scale_prev * prev) / s_next;
      const Real dnext = (cur + (t - diag(j)) * dcur - scale_prev * dprev) / s_next;
      prev = cur;
      dprev = dcur;
      cur = next;
      dcur = dnext;
      scale_prev = s_next;
    }
    return {cur, dcur};
  }

  /// Sum_{j<m} p_j(t)^2 of the orthonormal polynomials (reciprocal Christoffel function).
  Real christoffel_sum(int m, const Real& t) const {
    using std::sqrt;
    Real prev(0);
    Real cur = 1 / sqrt(mu0_);
    Real sum = cur * cur;
    Real scale_prev(0);
    for (int j = 0; j + 1 < m; ++j) {
      const Real s_next = sqrt(offdiag_sq(j + 1));
      const Real next = ((t - diag(j)) * cur - scale_prev * prev) / s_next;
      prev = cur;
      cur = next;
      scale_prev = s_next;
      sum += cur * cur;
    }
    return sum;
  }

 private:
  Real a_, b_, mu0_;
};

/// Coefficients (ascending powers of t) of the monic degree-m shifted Jacobi polynomial.
template <typename Real = double>
std::vector<Real> shifted_jacobi_monic(int m, const Real& a, const Real& b) {
  if (m < 0) throw DomainError("shifted_jacobi_monic: degree must be nonnegative");
  ShiftedJacobi<Real> rec(a, b);
  std::vector<Real> prev;            // p_{-1} = 0
  std::vector<Real> cur{Real(1)};    // p_0 = 1
  for (int j = 0; j < m; ++j) {
    std::vector<Real> next(cur.size() + 1, Real(0));
    const Real d = rec.diag(j);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= d * cur[i];
    }
    if (j > 0) {
      const Real e = rec.offdiag_sq(j);
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= e * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Horner evaluation of ascending-power coefficients.
template <typename Real>
Real eval_polynomial(const std::vector<Real>& coeffs, const Real& t) {
  Real s(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * t + *it;
  return s;
}

/// m-point rule on [0,1] for the weight t^a (1-t)^b.
template <typename Real = double>
struct GaussRule01 {
  int degree = 0;
  Real exponent_a{};
  Real exponent_b{};
  std::vector<Real> nodes;
  std::vector<Real> weights;
  bool fixed_left_endpoint = false;
};

namespace detail {

inline constexpr double kNodeTolerance = 1e-14;
inline constexpr int kMaxNodeIterations = 100;

// Root of the orthonormal p_m inside the sign-change bracket (lo, hi):
// Newton steps, falling back to bisection whenever a step leaves the bracket.
template <typename Real>
Real bracketed_root(const ShiftedJacobi<Real>& rec, int m, Real lo, Real hi) {
  using std::abs;
  Real f_lo = rec.orthonormal_with_derivative(m, lo).first;
  Real t = (lo + hi) / 2;
  Real last_step(1);
  for (int it = 0; it < kMaxNodeIterations; ++it) {
    auto [f, df] = rec.orthonormal_with_derivative(m, t);
    if (f == 0) return t;
    if ((f < 0) == (f_lo < 0)) {
      lo = t;
      f_lo = f;
    } else {
      hi = t;
    }
    Real next = t - f / df;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    last_step = abs(next - t);
    t = next;
    if (last_step <= Real(kNodeTolerance) || hi - lo <= Real(kNodeTolerance)) {
      // one more Newton step from the converged iterate
      auto [f2, df2] = rec.orthonormal_with_derivative(m, t);
      if (df2 != 0) {
        const Real polished = t - f2 / df2;
        if (polished > lo && polished < hi) t = polished;
      }
      return t;
    }
  }
  std::ostringstream msg;
  msg << "gauss node search did not converge for degree " << m << " in bracket ["
      << static_cast<double>(lo) << ", " << static_cast<double>(hi)
      << "], last step " << static_cast<double>(last_step);
  throw ComputationError(msg.str());
}

// Zeros of p_1..p_m built degree by degree; zeros of p_d are bracketed by
// the zeros of p_{d-1} together with the interval endpoints.
template <typename Real>
std::vector<Real> jacobi_zeros(const ShiftedJacobi<Real>& rec, int m) {
  std::vector<Real> zeros;
  for (int d = 1; d <= m; ++d) {
    std::vector<Real> next;
    next.reserve(d);
    for (int i = 0; i < d; ++i) {
      const Real lo = i == 0 ? Real(0) : zeros[i - 1];
      const Real hi = i == d - 1 ? Real(1) : zeros[i];
      next.push_back(bracketed_root(rec, d, lo, hi));
    }
    zeros = std::move(next);
  }
  return zeros;
}

}  // namespace detail

/// m-point Gauss rule for t^a (1-t)^b on [0,1]; exact for degree <= 2m-1.
template <typename Real = double>
GaussRule01<Real> gauss_rule_01(int m, const Real& a, const Real& b) {
  if (m < 1) throw DomainError("gauss_rule_01: m must be >= 1");
  ShiftedJacobi<Real> rec(a, b);
  GaussRule01<Real> rule;
  rule.degree = m;
  rule.exponent_a = a;
  rule.exponent_b = b;
  rule.nodes = detail::jacobi_zeros(rec, m);
  rule.weights.reserve(m);
  for (const Real& t : rule.nodes) rule.weights.push_back(1 / rec.christoffel_sum(m, t));
  return rule;
}

/**
 * @brief m-point left Radau rule for t^a (1-t)^b on [0,1] with nodes[0] = 0.
 *
 * Free nodes are the Gauss nodes of t^{a+1}(1-t)^b; every weight is a
 * Christoffel number 1/K_{m-1}(t,t) of the original weight. Exact for
 * degree <= 2m-2.
 */
template <typename Real = double>
GaussRule01<Real> radau_rule_01(int m, const Real& a, const Real& b) {
  if (m < 1) throw DomainError("radau_rule_01: m must be >= 1");
  ShiftedJacobi<Real> rec(a, b);
  GaussRule01<Real> rule;
  rule.degree = m;
  rule.exponent_a = a;
  rule.exponent_b = b;
  rule.fixed_left_endpoint = true;
  rule.nodes.push_back(Real(0));
  if (m > 1) {
    ShiftedJacobi<Real> shifted(Real(a + 1), b);
    auto free_nodes = detail::jacobi_zeros(shifted, m - 1);
    rule.nodes.insert(rule.nodes.end(), free_nodes.begin(), free_nodes.end());
  }
  for (const Real& t : rule.nodes) rule.weights.push_back(1 / rec.christoffel_sum(m, t));
  return rule;
}

}  // namespace altrat

#endif  // ALTRAT_JACOBI_HPP_
