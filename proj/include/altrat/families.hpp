#ifndef ALTRAT_FAMILIES_HPP_
#define ALTRAT_FAMILIES_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altrat/error.hpp"
#include "altrat/params.hpp"
#include "altrat/rational.hpp"
#include "altrat/special.hpp"

namespace altrat {

/// A: weight 1/x, T: weight (x-1)^{-1/2}, LegendreMixed: weight 1/x^2.
enum class FamilyTag { A, T, LegendreMixed };

constexpr std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return "A";
    case FamilyTag::T: return "T";
    case FamilyTag::LegendreMixed: return "legendre-mixed";
  }
  return "?";
}

constexpr ParamPair family_params(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return classify_params(-1.0, 0.0);
    case FamilyTag::T: return classify_params(0.0, -0.5);
    case FamilyTag::LegendreMixed: return classify_params(-2.0, 0.0);
  }
  return {};
}

/// Lowest index of the family's orthogonal set: k = 0 is singular for A and T.
constexpr int first_index(FamilyTag tag) { return tag == FamilyTag::LegendreMixed ? 0 : 1; }

// ---------------------------------------------------------------- A-kind

namespace detail {

inline std::int64_t exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // C(n-k+i, i) at every step
  return static_cast<std::int64_t>(r);
}

inline constexpr int kMaxExactOrder = 20;

}  // namespace detail

/// Exact integer coefficients c_{k+j} = (-1)^j C(n-k, j) C(n+k+j, n-k), indexed j = k..n.
inline std::vector<std::int64_t> a_kind_coeffs_exact(int n, int k) {
  detail::check_indices(n, k);
  if (n > detail::kMaxExactOrder) throw DomainError("exact A-kind coefficients limited to n <= 20");
  std::vector<std::int64_t> out;
  for (int j = 0; j <= n - k; ++j) {
    const auto c = detail::exact_binomial(n - k, j) * detail::exact_binomial(n + k + j, n - k);
    out.push_back(j % 2 == 0 ? c : -c);
  }
  return out;
}

template <typename Real = double>
RationalCoeffs<Real> a_kind_coeffs(int n, int k) {
  detail::check_indices(n, k);
  RationalCoeffs<Real> out;
  out.n = n;
  out.k = k;
  out.params = family_params(FamilyTag::A);
  for (int j = 0; j <= n - k; ++j) {
    const Real c = binomial<Real>(n - k, j) * binomial<Real>(n + k + j, n - k);
    out.coeffs.push_back(j % 2 == 0 ? c : Real(-c));
  }
  return out;
}

/**
 * @brief A-kind coefficients produced by the downward three-term recurrence in
 * exact integer arithmetic (every division is checked to be exact).
 */
inline std::vector<std::int64_t> a_kind_recurrence_coeffs(int n, int k) {
  detail::check_indices(n, k);
  if (n > detail::kMaxExactOrder) throw DomainError("exact A-kind recurrence limited to n <= 20");
  using Wide = __int128;
  // full vectors over x^{-j}, j = 0..n
  std::vector<Wide> upper(n + 1, 0), cur(n + 1, 0);
  cur[n] = 1;  // R_nn
  if (k < n) {
    upper = cur;
    cur.assign(n + 1, 0);
    cur[n - 1] = 2 * n - 1;  // R_{n,n-1}
    cur[n] = -2 * n;
    for (int kk = n - 1; kk > k; --kk) {
      const Wide lin = Wide(2 * kk) * (2 * kk - 1) * (2 * kk + 1);
      const Wide con = Wide(2 * kk) * 2 * (Wide(n) * n + Wide(kk) * kk + n);
      const Wide up = Wide(2 * kk - 1) * (n - kk) * (n + kk + 1);
      const Wide den = Wide(2 * kk + 1) * (n + kk) * (n - kk + 1);
      std::vector<Wide> next(n + 1, 0);
      for (int j = 0; j <= n; ++j) {
        Wide v = -con * cur[j] - up * upper[j];
        if (j + 1 <= n) v += lin * cur[j + 1];  // x * x^{-(j+1)}
        if (v % den != 0) {
          throw ComputationError("A-kind recurrence produced a non-integer coefficient");
        }
        next[j] = v / den;
      }
      upper = std::move(cur);
      cur = std::move(next);
    }
  }
  std::vector<std::int64_t> out;
  for (int j = k; j <= n; ++j) out.push_back(static_cast<std::int64_t>(cur[j]));
  return out;
}

/// R^A_nk(x) by the downward recurrence from R_nn = x^{-n}.
inline double a_kind_recurrence_eval(int n, int k, double x) {
  detail::check_indices(n, k);
  if (x == 0) throw DomainError("rational functions are not defined at x = 0");
  double upper = 0;
  double cur = std::pow(x, -n);
  if (k == n) return cur;
  upper = cur;
  cur = (2.0 * n - 1) * std::pow(x, -(n - 1)) - 2.0 * n * std::pow(x, -n);
  for (int kk = n - 1; kk > k; --kk) {
    const double next =
        (2.0 * kk * ((2.0 * kk - 1) * (2.0 * kk + 1) * x - 2.0 * (double(n) * n + double(kk) * kk + n)) * cur -
         (2.0 * kk - 1) * (n - kk) * (n + kk + 1) * upper) /
        ((2.0 * kk + 1) * (n + kk) * (n - kk + 1));
    upper = cur;
    cur = next;
  }
  return cur;
}

/// int R^A_nk R^A_nl / x dx = delta_kl / (k + l); k = 0 is allowed against l >= 1.
inline double a_kind_norm(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("A-kind indices must be nonnegative");
  if (k == 0 && l == 0) {
    throw DivergenceError("the A-kind singular term R_n0 has a divergent self-norm");
  }
  return k == l ? 1.0 / (k + l) : 0.0;
}

/// int R^A_nk / x dx = 1/k.
inline double a_kind_integral(int k) {
  if (k < 1) throw DivergenceError("A-kind weight integral requires k >= 1");
  return 1.0 / k;
}

// ---------------------------------------------------------------- T-kind

/// c_nk = (n-k)! / (n-k-1/2)_{n-k} (falling factorial).
template <typename Real = double>
Real t_kind_scale(int n, int k) {
  detail::check_indices(n, k);
  const int m = n - k;
  return factorial<Real>(m) / falling_factorial(Real(Real(m) - Real(1) / 2), m);
}

template <typename Real = double>
RationalCoeffs<Real> t_kind_coeffs(int n, int k) {
  auto out = rodrigues_coeffs<Real>(n, k, family_params(FamilyTag::T));
  out *= t_kind_scale<Real>(n, k);
  return out;
}

/// R^T_nk(x) by the downward recurrence from R_nn = x^{-n}.
inline double t_kind_eval(int n, int k, double x) {
  detail::check_indices(n, k);
  if (x == 0) throw DomainError("rational functions are not defined at x = 0");
  double upper = 0;
  double cur = std::pow(x, -n);
  if (k == n) return cur;
  upper = cur;
  cur = (4.0 * n - 3) * std::pow(x, -(n - 1)) - (4.0 * n - 2) * std::pow(x, -n);
  for (int kk = n - 1; kk > k; --kk) {
    const double next =
        ((4.0 * kk - 1) * ((4.0 * kk - 3) * (4.0 * kk + 1) * x -
                           2.0 * (4.0 * n * n + 4.0 * kk * kk - 2.0 * kk - 1)) * cur -
         4.0 * (n - kk) * (n + kk) * (4.0 * kk - 3) * upper) /
        ((2.0 * (n + kk) - 1) * (2.0 * (n - kk) + 1) * (4.0 * kk + 1));
    upper = cur;
    cur = next;
  }
  return cur;
}

/**
 * @brief int R^T_nk R^T_nl / sqrt(x-1) dx
 *   = pi/(2(k+l)-1) (2n+k+l-1)!!/(2n+k+l-2)!! (2n-k-l)!!/(2n-k-l-1)!! delta_kl
 * for k = 0..n, l = 1..n.
 */
inline double t_kind_norm(int n, int k, int l) {
  if (n < 1 || k < 0 || k > n || l < 1 || l > n) {
    throw DomainError("T-kind norm needs n >= 1, 0 <= k <= n, 1 <= l <= n");
  }
  if (k != l) return 0.0;
  const int s = k + l;
  return std::numbers::pi / (2.0 * s - 1) * double_factorial(2 * n + s - 1) / double_factorial(2 * n + s - 2) *
         double_factorial(2 * n - s) / double_factorial(2 * n - s - 1);
}

/// int R^T_nk / sqrt(x-1) dx = (2k-3)!!/(2k)!! 2n pi, k = 1..n.
inline double t_kind_integral(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw DomainError("T-kind integral needs 1 <= k <= n");
  return double_factorial(2 * k - 3) / double_factorial(2 * k) * 2.0 * n * std::numbers::pi;
}

// ------------------------------------------------------ Legendre-mixed

template <typename Real = double>
RationalCoeffs<Real> legendre_mixed_coeffs(int n, int k) {
  return rodrigues_coeffs<Real>(n, k, family_params(FamilyTag::LegendreMixed));
}

/// int R_nk R_nl / x^2 dx = delta_kl / (k + l + 1), k, l = 0..n.
inline double legendre_mixed_norm(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("indices must be nonnegative");
  return k == l ? 1.0 / (k + l + 1) : 0.0;
}

// ---------------------------------------------------------------- common

template <typename Real = double>
RationalCoeffs<Real> family_coeffs(FamilyTag tag, int n, int k) {
  switch (tag) {
    case FamilyTag::A: return a_kind_coeffs<Real>(n, k);
    case FamilyTag::T: return t_kind_coeffs<Real>(n, k);
    case FamilyTag::LegendreMixed: return legendre_mixed_coeffs<Real>(n, k);
  }
  throw DomainError("unknown family");
}

/// Diagonal squared norm of R_nk within the family's own normalization.
inline double family_norm(FamilyTag tag, int n, int k) {
  switch (tag) {
    case FamilyTag::A: return a_kind_norm(k, k);
    case FamilyTag::T:
      if (k == 0) throw DivergenceError("the T-kind singular term R_n0 has a divergent self-norm");
      return t_kind_norm(n, k, k);
    case FamilyTag::LegendreMixed: return legendre_mixed_norm(k, k);
  }
  throw DomainError("unknown family");
}

/**
 * @brief Polynomial coefficients of
 *   x^2(x-1) y'' + x(first_x x + first_1) y' + (zeroth_x x + zeroth_1) y = 0.
 */
struct OdeCoefficients {
  double first_x = 0;
  double first_1 = 0;
  double zeroth_x = 0;
  double zeroth_1 = 0;

  friend bool operator==(const OdeCoefficients&, const OdeCoefficients&) = default;
};

/// The general equation satisfied by R_nk^(gamma,beta).
inline OdeCoefficients general_ode(const ParamPair& p, int n, int k) {
  const double g = p.gamma, b = p.beta;
  return {g + b + 2, -g - 1, -k * (k - g - b - 1), n * (n - g)};
}

/// The equations as stated for each family.
inline OdeCoefficients family_ode(FamilyTag tag, int n, int k) {
  switch (tag) {
    case FamilyTag::A: return {1.0, 0.0, -double(k) * k, double(n) * (n + 1)};
    case FamilyTag::T: return {1.5, -1.0, -k * (k - 0.5), double(n) * n};
    case FamilyTag::LegendreMixed: return general_ode(family_params(tag), n, k);
  }
  throw DomainError("unknown family");
}

/// Residual of the ODE at x, relative to the sum of the magnitudes of its three terms.
template <typename Real>
double ode_residual(const OdeCoefficients& ode, const RationalCoeffs<Real>& y, double x) {
  const Real xx(x);
  const Real y0 = eval_derivative(y, xx, 0), y1 = eval_derivative(y, xx, 1),
             y2 = eval_derivative(y, xx, 2);
  const Real c2 = xx * xx * (xx - 1);
  const Real c1 = xx * (Real(ode.first_x) * xx + Real(ode.first_1));
  const Real c0 = Real(ode.zeroth_x) * xx + Real(ode.zeroth_1);
  using std::abs;
  const Real scale = abs(c2) * eval_magnitude(y, xx, 2) +
                     (abs(Real(ode.first_x)) * xx * xx + abs(Real(ode.first_1)) * xx) *
                         eval_magnitude(y, xx, 1) +
                     (abs(Real(ode.zeroth_x)) * xx + abs(Real(ode.zeroth_1))) * eval_magnitude(y, xx, 0);
  if (scale == 0) return 0.0;
  return static_cast<double>(abs(c2 * y2 + c1 * y1 + c0 * y0) / scale);
}

inline double family_ode_residual(FamilyTag tag, int n, int k, double x) {
  return ode_residual(family_ode(tag, n, k), family_coeffs<double>(tag, n, k), x);
}

/// A named family or the generic R_nk^(gamma,beta) system.
struct Family {
  std::optional<FamilyTag> tag;
  ParamPair params;

  static Family generic(const ParamPair& p) {
    require_valid(p);
    return {std::nullopt, p};
  }
  static Family named(FamilyTag t) { return {t, family_params(t)}; }

  std::string name() const { return tag ? std::string(to_string(*tag)) : std::string("generic"); }

  /// Lowest normalizable index: 0 for interior parameters, 1 when R_n0 is singular.
  int first_index() const {
    if (tag) return altrat::first_index(*tag);
    return params.cls == ParamClass::Interior ? 0 : 1;
  }

  template <typename Real = double>
  RationalCoeffs<Real> coeffs(int n, int k) const {
    if (tag) return family_coeffs<Real>(*tag, n, k);
    return rodrigues_coeffs<Real>(n, k, params);
  }

  /// R_nk(x) in this family's normalization, through jacobi_eval; x = +inf gives the limit.
  template <typename Real = double>
  Real value(int n, int k, const Real& x) const {
    const Real v = jacobi_eval<Real>(n, k, params, x);
    return tag == FamilyTag::T ? Real(t_kind_scale<Real>(n, k) * v) : v;
  }

  double norm(int n, int k) const {
    if (tag) return family_norm(*tag, n, k);
    return altrat::norm<double>(n, k, params);
  }
};

}  // namespace altrat

#endif  // ALTRAT_FAMILIES_HPP_
