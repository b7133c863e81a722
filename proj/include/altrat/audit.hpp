#ifndef ALTRAT_AUDIT_HPP_
#define ALTRAT_AUDIT_HPP_

#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <string_view>
#include <utility>
#include <vector>

#include "altrat/error.hpp"
#include "altrat/families.hpp"
#include "altrat/params.hpp"
#include "altrat/rational.hpp"

namespace altrat {

enum class IdentityId {
  GeneralRecurrence,
  DiffDifference1,
  DiffDifference2,
  DifferentiationFormula,
  Ode,
  RodriguesVsRecurrence,
  Invariance,
};

inline constexpr std::array kAllIdentities{
    IdentityId::GeneralRecurrence,      IdentityId::DiffDifference1,
    IdentityId::DiffDifference2,        IdentityId::DifferentiationFormula,
    IdentityId::Ode,                    IdentityId::RodriguesVsRecurrence,
    IdentityId::Invariance,
};

constexpr std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::GeneralRecurrence: return "general_recurrence";
    case IdentityId::DiffDifference1: return "diff_difference_1";
    case IdentityId::DiffDifference2: return "diff_difference_2";
    case IdentityId::DifferentiationFormula: return "differentiation_formula";
    case IdentityId::Ode: return "ode";
    case IdentityId::RodriguesVsRecurrence: return "rodrigues_vs_recurrence";
    case IdentityId::Invariance: return "invariance";
  }
  return "?";
}

enum class Verdict { Pass, Fail, NotApplicable };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "N/A";
  }
  return "?";
}

struct IdentityRow {
  IdentityId id;
  int n = 0;
  int k = 0;
  int p = 0;  // invariance shift, 0 elsewhere
  double x = 0;
  double residual = 0;
  Verdict verdict = Verdict::Pass;
};

/**
 * @brief Residual table of the stated identities for R_nk^(gamma,beta).
 *
 * Every R value comes from the Rodrigues expansion. A row's residual is
 * |sum of the identity's terms| / sum of the terms' magnitudes, where a
 * term's magnitude is |its coefficient| times sum_j |c_j x^{-j}| (or the
 * matching derivative sum); zero crossings of R therefore do not inflate it.
 */
struct IdentityReport {
  ParamPair params;
  int n_max = 0;
  double tolerance = 0;
  std::vector<double> sample_xs;
  std::vector<IdentityRow> rows;

  /// Fail if any row fails, Pass if at least one row passes and none fail.
  Verdict verdict(IdentityId id) const {
    bool any = false;
    for (const auto& r : rows) {
      if (r.id != id || r.verdict == Verdict::NotApplicable) continue;
      if (r.verdict == Verdict::Fail) return Verdict::Fail;
      any = true;
    }
    return any ? Verdict::Pass : Verdict::NotApplicable;
  }

  std::vector<IdentityRow> flagged() const {
    std::vector<IdentityRow> out;
    for (const auto& r : rows) {
      if (r.verdict == Verdict::Fail) out.push_back(r);
    }
    return out;
  }
};

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr std::array kDefaultAuditXs{1.1, 2.0, 5.0, 50.0};

namespace detail {

// value and magnitude of one term  coef * d^order R_{n,k}^{(g,b)}(x)
struct Term {
  double value = 0;
  double magnitude = 0;
};

class AuditContext {
 public:
  explicit AuditContext(double x) : x_(x) {}

  // R_{n,k}; R_{n,k} = 0 for k > n.
  Term r(int n, int k, double g, double b, double coef = 1.0, int order = 0) {
    if (k > n) return {};
    const auto& c = coeffs(n, k, g, b);
    return {coef * eval_derivative(c, x_, order), std::abs(coef) * eval_magnitude(c, x_, order)};
  }

  double x() const { return x_; }

 private:
  const RationalCoeffs<double>& coeffs(int n, int k, double g, double b) {
    auto key = std::make_tuple(n, k, g, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, rodrigues_expansion<double>(n, k, g, b)).first;
    }
    return it->second;
  }

  double x_;
  std::map<std::tuple<int, int, double, double>, RationalCoeffs<double>> cache_;
};

inline double residual(std::initializer_list<Term> terms) {
  double sum = 0, mag = 0;
  for (const auto& t : terms) {
    sum += t.value;
    mag += t.magnitude;
  }
  if (!std::isfinite(sum) || !std::isfinite(mag)) return std::numeric_limits<double>::quiet_NaN();
  return mag == 0 ? 0.0 : std::abs(sum) / mag;
}

inline Term scaled(Term t, double s) { return {t.value * s, t.magnitude * std::abs(s)}; }

}  // namespace detail

/**
 * @brief Audits the recurrence, differential-difference relations,
 * differentiation formula, ODE, Rodrigues expansion and invariance at every
 * (n, k <= n <= n_max, x).
 */
inline IdentityReport identity_audit(int n_max, const ParamPair& params,
                                     const std::vector<double>& sample_xs,
                                     double tolerance = kIdentityTolerance) {
  require_valid(params);
  if (n_max < 0 || n_max > kMaxOrder - 3) throw DomainError("n_max out of range");
  for (double x : sample_xs) {
    if (!(x > 1) || !std::isfinite(x)) throw DomainError("audit sample points must lie in (1, inf)");
  }
  const double g = params.gamma, b = params.beta;
  const double s = g + b;
  const bool a_kind = params == family_params(FamilyTag::A);
  const bool t_kind = params == family_params(FamilyTag::T);

  IdentityReport report{params, n_max, tolerance, sample_xs, {}};
  auto add = [&](IdentityId id, int n, int k, int p, double x, double res) {
    Verdict v = std::isnan(res) ? Verdict::NotApplicable
                                : (res <= tolerance ? Verdict::Pass : Verdict::Fail);
    report.rows.push_back({id, n, k, p, x, res, v});
  };

  for (double x : sample_xs) {
    detail::AuditContext ctx(x);
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto y = ctx.r(n, k, g, b);
        const auto y1 = ctx.r(n, k, g, b, 1.0, 1);
        const auto y2 = ctx.r(n, k, g, b, 1.0, 2);
        const auto mag_x = [&](double c0, double c1) {
          return std::abs(c0) + std::abs(c1) * x;  // |c0 + c1 x| bound
        };

        if (k >= 1) {
          // (n-k+1)(s-n-k+1)(s+2k) R_{k-1}
          //   = (s-2k+1)[-(s-2k+2)(s-2k) x - (s-2n)(g-2k+1) - 2(n-k)(n-k+1)] R_k
          //     - (g-n-k)(b+n-k)(s-2k+2) R_{k+1}
          const double lead = (n - k + 1) * (s - n - k + 1) * (s + 2 * k);
          const double cx = -(s - 2 * k + 1) * (s - 2 * k + 2) * (s - 2 * k);
          const double c0 = (s - 2 * k + 1) * (-(s - 2 * n) * (g - 2 * k + 1) - 2.0 * (n - k) * (n - k + 1));
          const double up = (g - n - k) * (b + n - k) * (s - 2 * k + 2);
          const detail::Term mid{-(c0 + cx * x) * y.value, mag_x(c0, cx) * y.magnitude};
          add(IdentityId::GeneralRecurrence, n, k, 0, x,
              detail::residual({ctx.r(n, k - 1, g, b, lead), mid, ctx.r(n, k + 1, g, b, up)}));
        }

        {
          // (2k+g+2) x(x-1) R' = [n(n+s+2) + k(k-b) - k(2k+g+2) x] R + (n+k+s+2)(n-k+b) R_{k+1}
          const double c0 = n * (n + s + 2) + k * (k - b);
          const double cx = -k * (2 * k + g + 2);
          add(IdentityId::DiffDifference1, n, k, 0, x,
              detail::residual({detail::scaled(y1, (2 * k + g + 2) * x * (x - 1)),
                                {-(c0 + cx * x) * y.value, mag_x(c0, cx) * y.magnitude},
                                ctx.r(n, k + 1, g, b, -(n + k + s + 2) * (n - k + b))}));
        }

        if (k >= 1) {
          // (2k+g) x(x-1) R' = [-n(n+s+2) - (k+s-1)(k+s+1) + (2k+g)(k+g+1) x] R
          //                    - (n-k+1)(n+k+g-1) R_{k-1}
          const double c0 = -n * (n + s + 2) - (k + s - 1) * (k + s + 1);
          const double cx = (2 * k + g) * (k + g + 1);
          add(IdentityId::DiffDifference2, n, k, 0, x,
              detail::residual({detail::scaled(y1, (2 * k + g) * x * (x - 1)),
                                {-(c0 + cx * x) * y.value, mag_x(c0, cx) * y.magnitude},
                                ctx.r(n, k - 1, g, b, (n - k + 1) * (n + k + g - 1))}));
        }

        // R' + (n/x) R = (n+k+g+1) R_{n,k+1}^{(g+1,b+1)}
        add(IdentityId::DifferentiationFormula, n, k, 0, x,
            detail::residual({y1, detail::scaled(y, n / x),
                              ctx.r(n, k + 1, g + 1, b + 1, -(n + k + g + 1))}));

        // x^2(x-1) y'' + x((s+2)x - g - 1) y' - [k(k-s-1) x - n(n-g)] y = 0
        {
          const double c1x = (s + 2) * x * x, c10 = (-g - 1) * x;
          const double c0x = -k * (k - s - 1) * x, c00 = n * (n - g);
          add(IdentityId::Ode, n, k, 0, x,
              detail::residual({detail::scaled(y2, x * x * (x - 1)),
                                {(c1x + c10) * y1.value, (std::abs(c1x) + std::abs(c10)) * y1.magnitude},
                                {(c0x + c00) * y.value, (std::abs(c0x) + std::abs(c00)) * y.magnitude}}));
        }

        // Rodrigues expansion against closed forms: the seeds R_nn and R_{n,n-1}
        // for every (gamma, beta), the A-/T-kind recurrences at their parameters.
        {
          std::optional<double> closed;
          double closed_mag = 0;
          if (a_kind) {
            closed = a_kind_recurrence_eval(n, k, x);
          } else if (t_kind) {
            closed = t_kind_eval(n, k, x) / t_kind_scale<double>(n, k);
          } else if (k == n) {
            closed = std::pow(x, -n);
          } else if (k == n - 1) {
            const double hi = -(s - 2 * n + 2) * std::pow(x, -(n - 1));
            const double lo = (g - 2 * n + 1) * std::pow(x, -n);
            closed = hi + lo;
            closed_mag = std::abs(hi) + std::abs(lo);
          }
          if (closed) {
            if (closed_mag == 0) closed_mag = std::abs(*closed);
            add(IdentityId::RodriguesVsRecurrence, n, k, 0, x,
                detail::residual({y, {-*closed, closed_mag}}));
          }
        }

        // R_{n+p,k+p}^{(g+2p,b)}(x) = x^{-p} R_nk(x); r_{n+p,k+p}^{(g+2p,b)} = r_nk
        for (int p = 1; p <= 3; ++p) {
          const double xp = std::pow(x, -p);
          double res = detail::residual({ctx.r(n + p, k + p, g + 2 * p, b), detail::scaled(y, -xp)});
          if (k >= 1 || params.cls == ParamClass::Interior) {
            const double r0 = detail::norm_formula<double>(n, k, g, b);
            const double r1 = detail::norm_formula<double>(n + p, k + p, g + 2 * p, b);
            if (!std::isnan(r0) && !std::isnan(r1)) {
              res = std::max(res, std::abs(r1 - r0) / std::abs(r0));
            }
          }
          add(IdentityId::Invariance, n, k, p, x, res);
        }
      }
    }
  }
  return report;
}

}  // namespace altrat

#endif  // ALTRAT_AUDIT_HPP_
