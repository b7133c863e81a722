#ifndef ALTRAT_APPROXIMATION_HPP_
#define ALTRAT_APPROXIMATION_HPP_

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altrat/error.hpp"
#include "altrat/families.hpp"
#include "altrat/quadrature.hpp"
#include "altrat/rational.hpp"

namespace altrat {

/// A function on (1, inf), optionally with its limit at infinity.
struct HalfLineFunction {
  std::function<double(double)> value;
  std::optional<double> limit_at_infinity;
};

/// Coefficients a_k, k = first..n, of f ~ sum a_k R_nk in one family.
struct Expansion {
  Family family;
  int n = 0;
  int first = 1;
  std::vector<double> coefficients;

  bool includes_k0() const { return first == 0; }
  double coefficient(int k) const {
    if (k < first || k > n) return 0.0;
    return coefficients[static_cast<std::size_t>(k - first)];
  }
};

/// AltGauss(n,1) for A, T and generic families; RadauRational(n) for Legendre-mixed.
inline HalfLineRule<double> canonical_rule(const Family& family, int n) {
  if (family.tag == FamilyTag::LegendreMixed) return radau_rational_rule<double>(n);
  return alt_gauss_rule<double>(n, 1, family.params);
}

/// Index of the first projected term: k = 0 only where the canonical rule resolves it.
inline int projection_first_index(const Family& family) {
  return family.tag == FamilyTag::LegendreMixed ? 0 : 1;
}

/**
 * @brief Discrete-orthogonality projection
 *   a_k = (1/r_nk) sum_i W_i f(x_i) R_nk(x_i)
 * on the family's canonical rule. Exact for every f in the family span.
 */
inline Expansion project(const HalfLineFunction& f, const Family& family, int n) {
  if (!f.value) throw DomainError("project: no function supplied");
  const auto rule = canonical_rule(family, n);
  if (rule.at_infinity() && !f.limit_at_infinity) {
    throw DomainError("project: the " + family.name() +
                      " rule has an abscissa at infinity; a limit value of f is required");
  }
  std::vector<double> fx;
  fx.reserve(rule.nodes().size());
  for (double x : rule.nodes()) fx.push_back(f.value(x));

  Expansion e{family, n, projection_first_index(family), {}};
  for (int k = e.first; k <= n; ++k) {
    double s = 0;
    for (std::size_t i = 0; i < fx.size(); ++i) {
      s += rule.weights()[i] * fx[i] * family.value(n, k, rule.nodes()[i]);
    }
    if (rule.at_infinity()) {
      s += rule.infinity_weight() * *f.limit_at_infinity *
           family.value(n, k, std::numeric_limits<double>::infinity());
    }
    e.coefficients.push_back(s / family.norm(n, k));
  }
  return e;
}

/// sum_k a_k R_nk(x); x = +inf gives the k = 0 contribution a_0 c_0.
inline double synthesize(const Expansion& e, double x) {
  if (!(x >= 1)) throw DomainError("synthesize: x must be >= 1");
  double s = 0;
  for (int k = e.first; k <= e.n; ++k) s += e.coefficient(k) * e.family.value(e.n, k, x);
  return s;
}

struct ResidualSummary {
  double max_abs = 0;
  double mean_abs = 0;
  double max_rel = 0;
  double mean_rel = 0;
};

/// Error of the synthesized expansion against f at the probes; relative errors fall back to absolute where f = 0.
inline ResidualSummary residual_report(const Expansion& e, const HalfLineFunction& f,
                                       const std::vector<double>& probe_xs) {
  ResidualSummary out;
  if (probe_xs.empty()) return out;
  for (double x : probe_xs) {
    double fx;
    if (std::isinf(x)) {
      if (!f.limit_at_infinity) throw DomainError("residual_report: probe at infinity needs a limit");
      fx = *f.limit_at_infinity;
    } else {
      if (!(x > 1)) throw DomainError("residual_report: probes must lie in (1, inf)");
      fx = f.value(x);
    }
    const double err = std::abs(synthesize(e, x) - fx);
    const double rel = fx != 0 ? err / std::abs(fx) : err;
    out.max_abs = std::max(out.max_abs, err);
    out.max_rel = std::max(out.max_rel, rel);
    out.mean_abs += err;
    out.mean_rel += rel;
  }
  out.mean_abs /= static_cast<double>(probe_xs.size());
  out.mean_rel /= static_cast<double>(probe_xs.size());
  return out;
}

/// Named test functions: const1 (f = 1), recip (1/x), recip1p (1/(1+x)).
inline HalfLineFunction builtin_function(std::string_view id) {
  if (id == "const1") return {[](double) { return 1.0; }, 1.0};
  if (id == "recip") return {[](double x) { return 1.0 / x; }, 0.0};
  if (id == "recip1p") return {[](double x) { return 1.0 / (1.0 + x); }, 0.0};
  throw DomainError("unknown builtin function '" + std::string(id) + "'");
}

}  // namespace altrat

#endif  // ALTRAT_APPROXIMATION_HPP_
