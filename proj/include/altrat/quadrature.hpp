#ifndef ALTRAT_QUADRATURE_HPP_
#define ALTRAT_QUADRATURE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "altrat/error.hpp"
#include "altrat/families.hpp"
#include "altrat/jacobi.hpp"
#include "altrat/params.hpp"
#include "altrat/rational.hpp"

namespace altrat {

enum class RuleKind { AltGauss, DirectGauss, RadauRational };

constexpr std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::AltGauss: return "altgauss";
    case RuleKind::DirectGauss: return "directgauss";
    case RuleKind::RadauRational: return "radau";
  }
  return "?";
}

/// Relative tolerance of the moment certification every rule passes at construction.
inline constexpr double kCertificationTolerance = 1e-10;

/**
 * @brief Quadrature rule on [1, inf) for the weight x^gamma (x-1)^beta.
 *
 * Finite nodes are stored in increasing order; an optional abscissa at
 * infinity carries its own weight, applied to lim_{x->inf} f(x). The
 * constructor certifies
 *
 *   sum_i W_i x_i^{-j} = B(beta+1, j-gamma-beta-1),   j in [j_lo, j_hi],
 *
 * and throws ComputationError otherwise, so every instance is certified.
 */
template <typename Real = double>
class HalfLineRule {
 public:
  HalfLineRule(ParamPair params, RuleKind kind, int n, int k, std::vector<Real> nodes,
               std::vector<Real> weights, std::optional<Real> infinity_weight, int j_lo, int j_hi)
      : params_(params),
        kind_(kind),
        n_(n),
        k_(k),
        nodes_(std::move(nodes)),
        weights_(std::move(weights)),
        infinity_weight_(std::move(infinity_weight)),
        j_lo_(j_lo),
        j_hi_(j_hi) {
    if (nodes_.size() != weights_.size()) throw DomainError("nodes and weights differ in length");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!(nodes_[i] > 1) || (i > 0 && !(nodes_[i] > nodes_[i - 1]))) {
        throw ComputationError("rule nodes must be strictly increasing and > 1");
      }
      if (!(weights_[i] > 0)) throw ComputationError("rule weights must be positive");
    }
    certify();
  }

  const ParamPair& params() const { return params_; }
  RuleKind kind() const { return kind_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Real>& nodes() const { return nodes_; }
  const std::vector<Real>& weights() const { return weights_; }
  bool at_infinity() const { return infinity_weight_.has_value(); }
  Real infinity_weight() const { return infinity_weight_.value_or(Real(0)); }
  int j_lo() const { return j_lo_; }
  int j_hi() const { return j_hi_; }
  /// Worst relative moment residual found by the certification.
  double certified_residual() const { return worst_residual_; }

  /// sum_i W_i f(x_i), plus W_inf * limit when the rule has an abscissa at infinity.
  template <typename F>
  Real integrate(F&& f, std::optional<Real> limit = std::nullopt) const {
    Real s(0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * Real(f(nodes_[i]));
    if (infinity_weight_) {
      if (!limit) throw DomainError("rule has an abscissa at infinity: a limit value is required");
      s += *infinity_weight_ * *limit;
    }
    return s;
  }

  /// Whether x^{-j} is inside the certified exactness window.
  bool exact_for(int j) const { return j >= j_lo_ && j <= j_hi_; }

 private:
  void certify() {
    using std::abs;
    int worst_j = j_lo_;
    worst_residual_ = 0;
    for (int j = j_lo_; j <= j_hi_; ++j) {
      const Real expected = moment<Real>(j, params_);
      Real sum(0);
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        Real p(1);
        const Real t = Real(1) / nodes_[i];
        for (int q = 0; q < j; ++q) p *= t;
        sum += weights_[i] * p;
      }
      if (infinity_weight_ && j == 0) sum += *infinity_weight_;
      const double r = static_cast<double>(abs(sum - expected) / abs(expected));
      if (!(r <= worst_residual_)) {
        worst_residual_ = r;
        worst_j = j;
      }
    }
    if (!(worst_residual_ <= kCertificationTolerance)) {
      std::ostringstream msg;
      msg << to_string(kind_) << " rule failed moment certification: worst j=" << worst_j
          << ", relative residual " << worst_residual_;
      throw ComputationError(msg.str());
    }
  }

  ParamPair params_;
  RuleKind kind_;
  int n_, k_;
  std::vector<Real> nodes_;
  std::vector<Real> weights_;
  std::optional<Real> infinity_weight_;
  int j_lo_, j_hi_;
  double worst_residual_ = 0;
};

namespace detail {

// x = 1/t maps increasing t to decreasing x; W = v x^power.
template <typename Real>
std::pair<std::vector<Real>, std::vector<Real>> map_to_half_line(const GaussRule01<Real>& rule,
                                                                 int power, std::size_t skip = 0) {
  std::vector<Real> xs, ws;
  for (std::size_t i = rule.nodes.size(); i-- > skip;) {
    const Real x = Real(1) / rule.nodes[i];
    Real w = rule.weights[i];
    for (int q = 0; q < power; ++q) w *= x;
    xs.push_back(x);
    ws.push_back(w);
  }
  return {std::move(xs), std::move(ws)};
}

}  // namespace detail

/**
 * @brief Alternative Gaussian rule: n-k+1 abscissas at the nontrivial zeros of
 * R_{n,k-1}, exact for x^{-j}, 2k-1 <= j <= 2n.
 *
 * Recalculated from the Gauss rule of t^{2k-gamma-beta-3}(1-t)^beta on [0,1].
 */
template <typename Real = double>
HalfLineRule<Real> alt_gauss_rule(int n, int k, const ParamPair& params) {
  require_valid(params);
  if (k < 1 || k > n) throw DomainError("alternative Gauss rule needs 1 <= k <= n");
  const Real e = Real(2 * k - 3) - Real(params.gamma) - Real(params.beta);
  if (!(e > -1)) throw DomainError("alternative Gauss rule needs 2k-gamma-beta-3 > -1");
  const auto rule01 = gauss_rule_01<Real>(n - k + 1, e, Real(params.beta));
  auto [xs, ws] = detail::map_to_half_line(rule01, 2 * k - 1);
  return HalfLineRule<Real>(params, RuleKind::AltGauss, n, k, std::move(xs), std::move(ws),
                            std::nullopt, 2 * k - 1, 2 * n);
}

/**
 * @brief Gauss-type rule of the direct system: k-n abscissas, exact for
 * x^{-j}, 2n <= j <= 2k-1. Recalculated from the Gauss rule of
 * t^{alpha+2n}(1-t)^beta, alpha = -gamma-beta-2.
 */
template <typename Real = double>
HalfLineRule<Real> direct_gauss_rule(int n, int k, const ParamPair& params) {
  require_valid(params);
  if (n < 0 || k <= n) throw DomainError("direct Gauss rule needs 0 <= n < k");
  const Real e = Real(2 * n - 2) - Real(params.gamma) - Real(params.beta);
  if (!(e > -1)) {
    throw DomainError("direct Gauss rule needs -gamma-beta-2+2n > -1 (moment x^-" +
                      std::to_string(2 * n) + " diverges)");
  }
  const auto rule01 = gauss_rule_01<Real>(k - n, e, Real(params.beta));
  auto [xs, ws] = detail::map_to_half_line(rule01, 2 * n);
  return HalfLineRule<Real>(params, RuleKind::DirectGauss, n, k, std::move(xs), std::move(ws),
                            std::nullopt, 2 * n, 2 * k - 1);
}

/**
 * @brief Radau-Rational rule for weight 1/x^2: n finite abscissas plus one at
 * infinity, exact for x^{-j}, 0 <= j <= 2n.
 */
template <typename Real = double>
HalfLineRule<Real> radau_rational_rule(int n) {
  if (n < 0) throw DomainError("Radau-Rational rule needs n >= 0");
  const auto rule01 = radau_rule_01<Real>(n + 1, Real(0), Real(0));
  auto [xs, ws] = detail::map_to_half_line(rule01, 0, 1);
  return HalfLineRule<Real>(family_params(FamilyTag::LegendreMixed), RuleKind::RadauRational, n, 0,
                            std::move(xs), std::move(ws), rule01.weights.front(), 0, 2 * n);
}

/// Discrete Gram matrix over the family's index set first..n.
template <typename Real = double>
struct GramMatrix {
  int n = 0;
  int first = 0;
  int j_lo = 0, j_hi = 0;
  std::vector<std::vector<Real>> values;

  const Real& at(int k, int l) const {
    return values[static_cast<std::size_t>(k - first)][static_cast<std::size_t>(l - first)];
  }
  /// All exponents of R_nk R_nl (k+l .. 2n) lie inside the rule's exactness window.
  bool exact(int k, int l) const { return k + l >= j_lo && 2 * n <= j_hi; }
};

/// G[k][l] = sum_i W_i R_nk(x_i) R_nl(x_i); the abscissa at infinity uses the limit of R_n0.
template <typename Real = double>
GramMatrix<Real> discrete_gram(const HalfLineRule<Real>& rule, const Family& family, int n) {
  if (!(rule.params() == family.params)) {
    throw DomainError("rule weight does not match the family weight");
  }
  GramMatrix<Real> g;
  g.n = n;
  g.first = family.first_index();
  g.j_lo = rule.j_lo();
  g.j_hi = rule.j_hi();
  const std::size_t m = static_cast<std::size_t>(n - g.first + 1);
  // values of every basis function at every abscissa
  std::vector<std::vector<Real>> vals(m);
  std::vector<Real> limits(m);
  for (std::size_t a = 0; a < m; ++a) {
    const int k = g.first + static_cast<int>(a);
    for (const Real& x : rule.nodes()) vals[a].push_back(family.value<Real>(n, k, x));
    limits[a] = k == 0 ? family.value<Real>(n, 0, Real(std::numeric_limits<double>::infinity())) : Real(0);
  }
  g.values.assign(m, std::vector<Real>(m, Real(0)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      Real s(0);
      for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        s += rule.weights()[i] * vals[a][i] * vals[b][i];
      }
      if (rule.at_infinity()) s += rule.infinity_weight() * limits[a] * limits[b];
      g.values[a][b] = s;
      g.values[b][a] = s;
    }
  }
  return g;
}

}  // namespace altrat

#endif  // ALTRAT_QUADRATURE_HPP_
