#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "altrat/approximation.hpp"
#include "oracles.hpp"

using namespace altrat;

namespace {

const std::vector<double> kProbes{1.05, 1.5, 2.0, 3.7, 10.0, 80.0};

HalfLineFunction in_span(const Family& f, int n, const std::vector<double>& a, int first) {
  // evaluated from quad-precision coefficients
  std::vector<RationalCoeffs<oracle::Quad>> basis;
  for (int k = first; k <= n; ++k) basis.push_back(f.coeffs<oracle::Quad>(n, k));
  double limit = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) limit += a[i] * static_cast<double>(basis[i].limit_at_infinity());
  return {[basis, a](double x) {
            oracle::Quad s = 0;
            for (std::size_t i = 0; i < basis.size(); ++i) s += a[i] * eval(basis[i], oracle::Quad(x));
            return static_cast<double>(s);
          },
          limit};
}

std::vector<Family> families() {
  return {Family::named(FamilyTag::A), Family::named(FamilyTag::T), Family::named(FamilyTag::LegendreMixed),
          Family::generic(classify_params(-3, 0.5))};
}

}  // namespace

TEST(Project, ReciprocalOnAKind) {
  const auto e = project(builtin_function("recip"), Family::named(FamilyTag::A), 2);
  EXPECT_FALSE(e.includes_k0());
  EXPECT_NEAR(e.coefficient(1), 1.0 / 3, 1e-14);
  EXPECT_NEAR(e.coefficient(2), 4.0 / 3, 1e-14);
  for (double x : {1.5, 2.0, 10.0}) EXPECT_NEAR(synthesize(e, x), 1 / x, 1e-14);
}

TEST(Project, ConstantOnLegendreMixed) {
  const auto e = project(builtin_function("const1"), Family::named(FamilyTag::LegendreMixed), 4);
  EXPECT_TRUE(e.includes_k0());
  EXPECT_NEAR(synthesize(e, std::numeric_limits<double>::infinity()), 1.0, 1e-12);
  for (double x : kProbes) EXPECT_NEAR(synthesize(e, x), 1.0, 1e-12);
}

TEST(Project, MissingLimitRejected) {
  HalfLineFunction f{[](double x) { return 1 / x; }, std::nullopt};
  EXPECT_THROW(project(f, Family::named(FamilyTag::LegendreMixed), 3), DomainError);
  EXPECT_NO_THROW(project(f, Family::named(FamilyTag::A), 3));
  EXPECT_THROW(builtin_function("nope"), DomainError);
}

TEST(Synthesize, Examples) {
  Expansion zero{Family::named(FamilyTag::A), 3, 1, {0, 0, 0}};
  EXPECT_EQ(synthesize(zero, 2.0), 0.0);
  Expansion a2{Family::named(FamilyTag::A), 2, 1, {0, 1}};
  EXPECT_DOUBLE_EQ(synthesize(a2, 2.0), 0.25);
  Expansion lm{Family::named(FamilyTag::LegendreMixed), 1, 0, {1, 0}};
  EXPECT_DOUBLE_EQ(synthesize(lm, std::numeric_limits<double>::infinity()), 2.0);
  EXPECT_THROW(synthesize(a2, 0.5), DomainError);
}

TEST(Project, RandomInSpanRoundTrip) {
  std::mt19937 rng(20261016);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> order(1, 10);
  for (const auto& fam : families()) {
    for (int draw = 0; draw < 20; ++draw) {
      const int n = order(rng);
      const int first = fam.tag == FamilyTag::LegendreMixed ? 0 : 1;
      std::vector<double> a;
      for (int k = first; k <= n; ++k) a.push_back(u(rng));
      const auto e = project(in_span(fam, n, a, first), fam, n);
      for (int k = first; k <= n; ++k) EXPECT_NEAR(e.coefficient(k), a[k - first], 1e-10) << fam.name() << " n=" << n;
    }
  }
}

TEST(Project, Linearity) {
  const Family fam = Family::named(FamilyTag::T);
  const auto f = builtin_function("recip1p");
  const auto g = builtin_function("recip");
  HalfLineFunction h{[&](double x) { return 2 * f.value(x) - 3 * g.value(x); }, 0.0};
  const auto ef = project(f, fam, 6), eg = project(g, fam, 6), eh = project(h, fam, 6);
  for (int k = 1; k <= 6; ++k) EXPECT_NEAR(eh.coefficient(k), 2 * ef.coefficient(k) - 3 * eg.coefficient(k), 1e-12);
}

TEST(Project, DeltaRecovery) {
  for (const auto& fam : families()) {
    const int n = 5;
    const int first = fam.tag == FamilyTag::LegendreMixed ? 0 : 1;
    for (int j = first; j <= n; ++j) {
      const auto e = project(HalfLineFunction{[&fam, j](double x) { return fam.value(n, j, x); },
                                              fam.value(n, j, std::numeric_limits<double>::infinity())},
                             fam, n);
      for (int k = first; k <= n; ++k) EXPECT_NEAR(e.coefficient(k), k == j ? 1.0 : 0.0, 1e-11);
    }
  }
}

TEST(Project, DenseOracleForReciprocalOnePlusX) {
  // a_k = (1/r_k) int_0^1 t^{-1} f(1/t) R_k(1/t) dt with a 5000-point Gauss-Legendre rule.
  // f is not in the span, so the discrete projection differs by aliasing that decays with n.
  const auto [t, w] = oracle::gauss_legendre_01(5000);
  const Family fam = Family::named(FamilyTag::A);
  std::vector<double> gap;
  for (int n : {4, 6, 8, 10, 12}) {
    const auto e = project(builtin_function("recip1p"), fam, n);
    double worst = 0;
    for (int k = 1; k <= n; ++k) {
      const auto c = fam.coeffs<oracle::Quad>(n, k);
      double s = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = 1 / t[i];
        s += w[i] / t[i] * (1 / (1 + x)) * static_cast<double>(eval(c, oracle::Quad(x)));
      }
      worst = std::max(worst, std::abs(e.coefficient(k) - s / fam.norm(n, k)));
    }
    gap.push_back(worst);
    if (n >= 10) {
      EXPECT_LT(worst, 1e-8) << "n=" << n;
    }
  }
  for (std::size_t i = 1; i < gap.size(); ++i) EXPECT_LT(gap[i], 0.1 * gap[i - 1]);
}

TEST(ResidualReport, InSpanAndConvergence) {
  const Family fam = Family::named(FamilyTag::A);
  const auto r = residual_report(project(builtin_function("recip"), fam, 3), builtin_function("recip"), kProbes);
  EXPECT_LT(r.max_abs, 1e-13);
  const auto f = builtin_function("recip1p");
  const double e4 = residual_report(project(f, fam, 4), f, kProbes).max_abs;
  const double e8 = residual_report(project(f, fam, 8), f, kProbes).max_abs;
  EXPECT_LT(e8, e4);
  EXPECT_GE(r.max_rel, r.mean_rel);
  EXPECT_THROW(residual_report(project(f, fam, 2), f, {0.5}), DomainError);
}
