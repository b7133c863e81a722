#ifndef ALTRAT_PARAMS_HPP_
#define ALTRAT_PARAMS_HPP_

#include <ostream>
#include <string_view>

#include "altrat/error.hpp"

namespace altrat {

enum class ParamClass { Invalid, Interior, Marginal };

constexpr std::string_view to_string(ParamClass c) {
  switch (c) {
    case ParamClass::Invalid: return "Invalid";
    case ParamClass::Interior: return "Interior";
    case ParamClass::Marginal: return "Marginal";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, ParamClass c) { return os << to_string(c); }

/**
 * @brief Exponents of the half-line weight x^gamma (x-1)^beta on [1, inf).
 *
 * Interior:  beta > -1, gamma + beta < -1 (every R_nk, k = 0..n, normalizable)
 * Marginal:  beta > -1, -1 <= gamma + beta < 0 (R_n0 is a singular term)
 * Invalid:   anything else
 */
struct ParamPair {
  double gamma = 0;
  double beta = 0;
  ParamClass cls = ParamClass::Invalid;

  /// Exponent of t in the mirrored weight t^alpha (1-t)^beta on [0,1], t = 1/x.
  constexpr double alpha() const { return -gamma - beta - 2; }
  constexpr bool valid() const { return cls != ParamClass::Invalid; }

  friend constexpr bool operator==(const ParamPair& l, const ParamPair& r) {
    return l.gamma == r.gamma && l.beta == r.beta;
  }
};

constexpr ParamPair classify_params(double gamma, double beta) {
  ParamPair p{gamma, beta, ParamClass::Invalid};
  const double s = gamma + beta;
  if (!(beta > -1) || !(s < 0)) return p;
  p.cls = s < -1 ? ParamClass::Interior : ParamClass::Marginal;
  return p;
}

/// Throws DomainError naming the violated constraint for Invalid pairs.
inline void require_valid(const ParamPair& p) {
  if (p.valid()) return;
  if (!(p.beta > -1)) throw DomainError("beta must be > -1");
  throw DomainError("gamma+beta must be < 0");
}

}  // namespace altrat

#endif  // ALTRAT_PARAMS_HPP_
