#include <gtest/gtest.h>

#include <cmath>

#include "balpha/builders.hpp"
#include "balpha/eigen.hpp"
#include "balpha/errors.hpp"
#include "balpha/generators.hpp"
#include "balpha/threshold.hpp"
#include "corpus.hpp"

using namespace balpha;

TEST(Beta0, Complete) {
  for (int n = 2; n <= 10; ++n) {
    const Bisection b = beta0(complete(n));
    EXPECT_NEAR(b.value, n / (n + 1.0), 1e-9) << n;
    EXPECT_EQ(b.method, Method::bisection);
    EXPECT_LE(b.hi - b.lo, 1e-10);
    EXPECT_LE(std::abs(b.certificate), 1e-7);
  }
}

TEST(Beta0, BipartiteFloor) {
  EXPECT_NEAR(beta0(path(5)).value, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(beta0(cycle(8)).value, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(beta0(complete_bipartite(3, 4)).value, 2.0 / 3.0, 1e-9);
  EXPECT_GT(beta0(cycle(7)).value, 2.0 / 3.0 + 1e-3);
}

TEST(Beta0, DisconnectedTakesComponentMinimum) {
  // K_3 alone sits at 3/4; a disjoint edge drags the minimum to the floor
  const Graph mixed(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_NEAR(beta0(mixed).value, 2.0 / 3.0, 1e-8);
  EXPECT_NEAR(epsilon(mixed), 1.0 / 6.0, 1e-8);
}

TEST(Beta0, Hln) {
  for (int n = 3; n <= 6; ++n)
    for (int l = 2; l <= n; ++l) EXPECT_NEAR(beta0(h_ln(n, l)).value, (n + 2.0) / (n + 4.0), 1e-9);
  // ell = 1 radical form at n = 3.
  EXPECT_NEAR(beta0(h_ln(3, 1)).value, (3.0 + std::sqrt(73.0)) / 16.0, 1e-9);
}

TEST(Beta0, PsdRegion) {
  for (const Graph& g : corpus::random_graphs()) {
    const double b = beta0(g).value;
    EXPECT_GE(eigenvalues(b_alpha(g, std::max(0.0, b - 1e-3))).back(), -1e-9) << g.label();
    EXPECT_LT(eigenvalues(b_alpha(g, std::min(1.0, b + 1e-3))).back(), 0.0) << g.label();
  }
}

TEST(Beta0, Edgeless) {
  const Bisection b = beta0(Graph(4));
  EXPECT_EQ(b.value, 1.0);
  EXPECT_EQ(b.method, Method::definitional);
  EXPECT_EQ(alpha0(Graph(4)).value, 0.0);
}

TEST(Alpha0, KnownValues) {
  for (int n = 2; n <= 8; ++n) EXPECT_NEAR(alpha0(complete(n)).value, 1.0 / n, 1e-9);
  EXPECT_NEAR(alpha0(path(6)).value, 0.5, 1e-9);
  const Bisection a = alpha0(cycle(5));
  // lambda_min(A_a(C_5)) = 2a + (1 - a) 2 cos(4 pi / 5).
  const double c = 2.0 * std::cos(4.0 * M_PI / 5.0);
  EXPECT_NEAR(a.value, -c / (2.0 - c), 1e-9);
}

TEST(Epsilon, Complete) {
  for (int n = 2; n <= 10; ++n) {
    const double want = (n * n - n - 1.0) / (n * (n + 1.0));
    EXPECT_NEAR(epsilon(complete(n)), want, 1e-8);
    EXPECT_NEAR(closed_forms(ClosedFormFamily::complete, n).epsilon, want, 1e-15);
  }
}

TEST(Epsilon, SixthFloor) {
  for (const Graph& g : corpus::random_graphs()) EXPECT_GE(epsilon(g), 1.0 / 6.0 - 1e-8) << g.label();
}

TEST(ClosedForms, Values) {
  const ClosedForm b = closed_forms(ClosedFormFamily::bipartite);
  EXPECT_DOUBLE_EQ(b.beta0, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(b.alpha0, 0.5);
  EXPECT_DOUBLE_EQ(b.epsilon, 1.0 / 6.0);
  const ClosedForm h = closed_forms(ClosedFormFamily::hln, 5, 3);
  EXPECT_DOUBLE_EQ(h.beta0, 7.0 / 9.0);
  EXPECT_THROW(closed_forms(ClosedFormFamily::hln, 2, 1), std::invalid_argument);
  EXPECT_THROW(closed_forms(ClosedFormFamily::complete, 1), std::invalid_argument);
}

TEST(ClosedForms, HlnAgainstBisection) {
  for (int n = 3; n <= 8; ++n) {
    for (int l = 1; l <= n; ++l) {
      const ClosedForm c = closed_forms(ClosedFormFamily::hln, n, l);
      const ThresholdReport r = threshold_report(h_ln(n, l));
      EXPECT_NEAR(c.beta0, r.beta0.value, 1e-8) << n << ',' << l;
      EXPECT_NEAR(c.alpha0, r.alpha0.value, 1e-8) << n << ',' << l;
      EXPECT_NEAR(c.epsilon, r.epsilon, 1e-8) << n << ',' << l;
    }
  }
}

TEST(ClosedForms, HlnOneConsistency) {
  for (int n = 3; n <= 8; ++n) EXPECT_LE(std::abs(hln1_consistency(n)), 1e-9) << n;
}

TEST(Report, CsvRow) {
  const ThresholdReport r = threshold_report(complete(3));
  EXPECT_EQ(threshold_csv_header(), "graph_id,beta0,alpha0,epsilon,method_beta0,iters,tol");
  const std::string row = threshold_csv_row(r);
  EXPECT_EQ(row.rfind("complete(3),0.75", 0), 0u) << row;
  EXPECT_NE(row.find(",bisection,"), std::string::npos);
}

TEST(Report, TolControlsBracket) {
  const Bisection coarse = beta0(cycle(5), 1e-4);
  const Bisection fine = beta0(cycle(5), 1e-12);
  EXPECT_LT(coarse.iterations, fine.iterations);
  EXPECT_LE(fine.hi - fine.lo, 1e-12);
  EXPECT_NEAR(coarse.value, fine.value, 1e-4);
}

TEST(Curve, LambdaMinShape) {
  const auto curve = lambda_min_curve(cycle(5), {0.0, 0.5, 0.9});
  ASSERT_EQ(curve.size(), 3u);
  EXPECT_NEAR(curve[0].second, 0.0, 1e-12);
  EXPECT_GT(curve[1].second, 0.0);
  EXPECT_LT(curve[2].second, 0.0);
}
