#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "altrat/quadrature.hpp"

using namespace altrat;

namespace {

const ParamPair kA = classify_params(-1, 0);
const ParamPair kT = classify_params(0, -0.5);
const ParamPair kLM = classify_params(-2, 0);
const std::vector<ParamPair> kGrid{kA, kT, kLM, classify_params(-1.5, -0.3), classify_params(-3, 0.5)};

double moment_sum(const HalfLineRule<double>& r, int j) {
  double s = r.at_infinity() && j == 0 ? r.infinity_weight() : 0.0;
  for (std::size_t i = 0; i < r.nodes().size(); ++i) s += r.weights()[i] * std::pow(r.nodes()[i], -j);
  return s;
}

}  // namespace

TEST(AltGauss, OnePointRules) {
  auto r = alt_gauss_rule(1, 1, kA);
  ASSERT_EQ(r.nodes().size(), 1u);
  EXPECT_NEAR(r.nodes()[0], 2.0, 1e-14);
  EXPECT_NEAR(r.weights()[0], 2.0, 1e-14);
  r = alt_gauss_rule(1, 1, kT);
  EXPECT_NEAR(r.nodes()[0], 2.0, 1e-14);
  EXPECT_NEAR(r.weights()[0], 2 * std::numbers::pi, 1e-13);
  r = alt_gauss_rule(1, 1, kLM);
  EXPECT_NEAR(r.nodes()[0], 1.5, 1e-14);
  EXPECT_NEAR(r.weights()[0], 0.75, 1e-14);
  EXPECT_EQ(r.kind(), RuleKind::AltGauss);
  EXPECT_EQ(r.j_lo(), 1);
  EXPECT_EQ(r.j_hi(), 2);
}

TEST(AltGauss, CertifiedExactnessWindow) {
  for (const auto& p : kGrid) {
    for (int n = 1; n <= 12; ++n) {
      for (int k : {1, 2, (n + 1) / 2}) {
        if (k > n) continue;
        const auto r = alt_gauss_rule(n, k, p);
        EXPECT_EQ(r.nodes().size(), static_cast<std::size_t>(n - k + 1));
        EXPECT_LE(r.certified_residual(), kCertificationTolerance);
        for (int j = 2 * k - 1; j <= 2 * n; ++j) {
          const double want = moment(j, p);
          EXPECT_LT(std::abs(moment_sum(r, j) - want), 1e-10 * want) << n << "," << k << "," << j;
        }
      }
    }
  }
}

TEST(AltGauss, NodesAreZerosOfPreviousMember) {
  for (const auto& p : kGrid) {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= n; ++k) {
        const auto r = alt_gauss_rule(n, k, p);
        const auto c = rodrigues_coeffs(n, k - 1, p);
        for (double x : r.nodes()) EXPECT_LT(std::abs(eval(c, x)), 1e-11 * eval_magnitude(c, x));
      }
    }
  }
}

TEST(AltGauss, NodesInterlace) {
  for (int n = 1; n <= 10; ++n) {
    const auto lo = alt_gauss_rule(n, 1, kA).nodes();
    const auto hi = alt_gauss_rule(n + 1, 1, kA).nodes();
    for (int i = 0; i < n; ++i) {
      EXPECT_LT(hi[i], lo[i]);
      EXPECT_LT(lo[i], hi[i + 1]);
    }
  }
}

TEST(AltGauss, RejectsBadInput) {
  EXPECT_THROW(alt_gauss_rule(1, 1, classify_params(0, 0)), DomainError);
  EXPECT_THROW(alt_gauss_rule(2, 0, kLM), DomainError);
  EXPECT_THROW(alt_gauss_rule(2, 3, kLM), DomainError);
}

TEST(DirectGauss, Examples) {
  const auto r = direct_gauss_rule(0, 1, kLM);
  ASSERT_EQ(r.nodes().size(), 1u);
  EXPECT_NEAR(r.nodes()[0], 2.0, 1e-14);
  EXPECT_NEAR(r.weights()[0], 1.0, 1e-14);
  EXPECT_THROW(direct_gauss_rule(0, 1, kA), DomainError);
  const auto r2 = direct_gauss_rule(0, 2, kLM);
  for (int j = 0; j <= 3; ++j) EXPECT_NEAR(moment_sum(r2, j), 1.0 / (j + 1), 1e-14);
}

TEST(DirectGauss, CertifiedExactnessWindow) {
  for (const auto& p : kGrid) {
    for (int n : {0, 1}) {
      for (int k = n + 1; k <= 6; ++k) {
        if (2 * n - p.gamma - p.beta - 2 <= -1) {
          EXPECT_THROW(direct_gauss_rule(n, k, p), DomainError);
          continue;
        }
        const auto r = direct_gauss_rule(n, k, p);
        for (int j = 2 * n; j <= 2 * k - 1; ++j) {
          const double want = moment(j, p);
          EXPECT_LT(std::abs(moment_sum(r, j) - want), 1e-10 * want);
        }
      }
    }
  }
}

TEST(DirectGauss, NodesAreZerosOfDirectFunction) {
  for (int k = 1; k <= 5; ++k) {
    const auto r = direct_gauss_rule(0, k, kLM);
    for (double x : r.nodes()) EXPECT_NEAR(direct_rational_eval(0, k, kLM, x), 0.0, 1e-13);
  }
}

TEST(RadauRational, SmallRules) {
  const auto r0 = radau_rational_rule(0);
  EXPECT_TRUE(r0.at_infinity());
  EXPECT_TRUE(r0.nodes().empty());
  EXPECT_NEAR(r0.infinity_weight(), 1.0, 1e-15);
  const auto r1 = radau_rational_rule(1);
  ASSERT_EQ(r1.nodes().size(), 1u);
  EXPECT_NEAR(r1.infinity_weight(), 0.25, 1e-13);
  EXPECT_NEAR(r1.nodes()[0], 1.5, 1e-13);
  EXPECT_NEAR(r1.weights()[0], 0.75, 1e-13);
  EXPECT_THROW(radau_rational_rule(-1), DomainError);
}

TEST(RadauRational, ExactFromZeroTo2n) {
  for (int n = 0; n <= 10; ++n) {
    const auto r = radau_rational_rule(n);
    EXPECT_EQ(r.j_lo(), 0);
    EXPECT_EQ(r.j_hi(), 2 * n);
    for (int j = 0; j <= 2 * n; ++j) EXPECT_NEAR(moment_sum(r, j), 1.0 / (j + 1), 1e-12 / (j + 1));
  }
}

TEST(RadauRational, IntegrateNeedsLimit) {
  const auto r = radau_rational_rule(2);
  EXPECT_THROW(r.integrate([](double) { return 1.0; }), DomainError);
  EXPECT_NEAR(r.integrate([](double) { return 1.0; }, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(r.integrate([](double x) { return 1 + 1 / x; }, 1.0), 1.5, 1e-14);
}

TEST(HalfLineRule, CertificationRejectsWrongWeights) {
  EXPECT_THROW(HalfLineRule<double>(kA, RuleKind::AltGauss, 1, 1, {2.0}, {2.1}, std::nullopt, 1, 2),
               ComputationError);
  EXPECT_THROW(HalfLineRule<double>(kA, RuleKind::AltGauss, 1, 1, {0.5}, {2.0}, std::nullopt, 1, 2),
               ComputationError);
  EXPECT_NO_THROW(HalfLineRule<double>(kA, RuleKind::AltGauss, 1, 1, {2.0}, {2.0}, std::nullopt, 1, 2));
}

TEST(DiscreteGram, Examples) {
  const auto g = discrete_gram(alt_gauss_rule(1, 1, kA), Family::named(FamilyTag::A), 1);
  EXPECT_NEAR(g.at(1, 1), 0.5, 1e-14);
  const auto h = discrete_gram(radau_rational_rule(1), Family::named(FamilyTag::LegendreMixed), 1);
  EXPECT_NEAR(h.at(1, 1), 1.0 / 3, 1e-14);
  EXPECT_NEAR(h.at(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(h.at(0, 1), 0.0, 1e-14);
  EXPECT_THROW(discrete_gram(alt_gauss_rule(1, 1, kA), Family::named(FamilyTag::T), 1), DomainError);
}

TEST(DiscreteGram, ReproducesContinuousNorms) {
  for (FamilyTag tag : {FamilyTag::A, FamilyTag::T}) {
    const Family f = Family::named(tag);
    for (int n = 1; n <= 10; ++n) {
      const auto g = discrete_gram(alt_gauss_rule(n, 1, f.params), f, n);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          ASSERT_TRUE(g.exact(k, l));
          const double r = f.norm(n, k);
          EXPECT_NEAR(g.at(k, l), k == l ? r : 0.0, 1e-9 * r) << to_string(tag) << n << k << l;
        }
    }
  }
  const Family lm = Family::named(FamilyTag::LegendreMixed);
  for (int n = 0; n <= 10; ++n) {
    const auto g = discrete_gram(radau_rational_rule(n), lm, n);
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) EXPECT_NEAR(g.at(k, l), k == l ? 1.0 / (2 * k + 1) : 0.0, 1e-9 / (k + l + 1));
  }
}
