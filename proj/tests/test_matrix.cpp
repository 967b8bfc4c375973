#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "balpha/builders.hpp"
#include "balpha/determinant.hpp"
#include "balpha/eigen.hpp"
#include "balpha/errors.hpp"
#include "balpha/generators.hpp"
#include "balpha/matrix.hpp"
#include "balpha/pendant_reduction.hpp"
#include "balpha/quotient.hpp"
#include "balpha/structure.hpp"
#include "balpha/theorems.hpp"
#include "corpus.hpp"

using namespace balpha;

namespace {

double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace

TEST(SymmetricMatrix, MutatorsKeepSymmetry) {
  SymmetricMatrix m(3);
  m.set(0, 2, 1.5);
  m.add(2, 0, 0.25);
  EXPECT_EQ(m(0, 2), 1.75);
  EXPECT_EQ(m(2, 0), 1.75);
  EXPECT_EQ(m.inf_norm(), 1.75);
  EXPECT_FALSE(m.is_integral());
  EXPECT_EQ(m.shifted(2.0).trace(), 6.0);
}

TEST(SymmetricMatrix, DumpFormat) {
  SymmetricMatrix m(2);
  m.set(0, 0, 1.0 / 3.0);
  m.set(0, 1, -2.0);
  EXPECT_EQ(dump(m), "0.333333333333 -2\n-2 0\n");
  EXPECT_EQ(format_number(-0.0), "0");
}

TEST(Builders, BaseMatrices) {
  const Graph g = path(3);
  const SymmetricMatrix a = build_base(g, BaseMatrix::adjacency);
  const SymmetricMatrix l = build_base(g, BaseMatrix::laplacian);
  const SymmetricMatrix q = build_base(g, BaseMatrix::signless_laplacian);
  EXPECT_EQ(a(0, 1), 1.0);
  EXPECT_EQ(l(1, 1), 2.0);
  EXPECT_EQ(l(0, 1), -1.0);
  EXPECT_EQ(q(0, 1), 1.0);
  EXPECT_TRUE(l.is_integral());
}

TEST(Builders, EndpointsAndSpecialPoints) {
  for (const Graph& g : corpus::random_graphs()) {
    EXPECT_EQ(b_alpha(g, 0.0), build_base(g, BaseMatrix::laplacian)) << g.label();
    EXPECT_EQ(b_alpha(g, 1.0), build_base(g, BaseMatrix::adjacency)) << g.label();
    EXPECT_LE(max_abs_diff(b_alpha(g, 0.5), build_base(g, BaseMatrix::degree).scaled(0.5)), 0.0);
    EXPECT_LE(max_abs_diff(b_alpha(g, 2.0 / 3.0), build_base(g, BaseMatrix::signless_laplacian).scaled(1.0 / 3.0)),
              1e-15);
  }
}

TEST(Builders, TwoRoutesAgree) {
  for (const Graph& g : corpus::random_graphs()) {
    for (double a : {0.1, 0.37, 0.9}) {
      EXPECT_LE(max_abs_diff(b_alpha(g, a), b_alpha_convex(g, a)), 1e-15);
      const auto [aa, ma] = a_alpha_and_m_alpha(g, a);
      SymmetricMatrix diff(g.order());
      for (int i = 0; i < g.order(); ++i)
        for (int j = i; j < g.order(); ++j) diff.set(i, j, ma(i, j) - aa(i, j));
      EXPECT_LE(max_abs_diff(diff, b_alpha(g, a)), 1e-15);
    }
  }
}

TEST(Builders, OutOfRangeAccepted) {
  EXPECT_TRUE(out_of_unit_range(-0.1));
  EXPECT_TRUE(out_of_unit_range(1.1));
  EXPECT_FALSE(out_of_unit_range(1.0));
  EXPECT_NO_THROW(b_alpha(path(3), 1.5));
}

TEST(Builders, QuadraticFormRoutes) {
  SeededUniform rng(3);
  for (const Graph& g : corpus::random_graphs()) {
    std::vector<double> x(static_cast<std::size_t>(g.order()));
    for (double& v : x) v = 2.0 * rng.next() - 1.0;
    const double a = rng.next();
    const QuadraticForm f = quadratic_form_routes(g, a, x);
    EXPECT_NEAR(f.direct, f.degree_sum, 1e-10);
    EXPECT_NEAR(f.direct, f.per_edge, 1e-10);
  }
  const std::vector<double> bad(2, 1.0);
  EXPECT_THROW(quadratic_form(path(3), 0.3, bad), std::invalid_argument);
}

TEST(Builders, KnExample) {
  // B_a(K_3) at a = 0.2: diagonal 1.6, off-diagonal -0.6.
  const SymmetricMatrix b = b_alpha(complete(3), 0.2);
  EXPECT_DOUBLE_EQ(b(0, 0), 1.6);
  EXPECT_DOUBLE_EQ(b(0, 1), -0.6);
}

TEST(Quotient, HlnPartitionIsEquitable) {
  for (int n = 3; n <= 7; ++n) {
    for (int l = 1; l <= n; ++l) {
      const Partition p = hln_partition(n, l);
      EXPECT_TRUE(is_equitable(h_ln(n, l), p)) << n << ',' << l;
      EXPECT_EQ(p.size(), l == n ? 2u : 4u);
    }
  }
}

TEST(Quotient, RefinementIsEquitableAndCoarse) {
  for (const Graph& g : corpus::random_graphs()) {
    const Partition p = equitable_refinement(g);
    EXPECT_TRUE(is_equitable(g, p)) << g.label();
  }
  EXPECT_EQ(equitable_refinement(cycle(6)).size(), 1u);
  EXPECT_EQ(equitable_refinement(corpus::petersen()).size(), 1u);
  EXPECT_EQ(equitable_refinement(star(4)).size(), 2u);
}

TEST(Quotient, NotEquitable) {
  EXPECT_FALSE(is_equitable(path(4), Partition{{0, 1}, {2, 3}}));
}

TEST(Quotient, RowSumsAndSymmetrization) {
  const Graph g = star(3);
  const QuotientResult r = quotient_matrix(b_alpha(g, 0.7), g, Partition{{0}, {1, 2, 3}});
  EXPECT_TRUE(r.equitable);
  EXPECT_NEAR(r.quotient(0, 0), 0.9, 1e-15);
  EXPECT_NEAR(r.quotient(0, 1), 3 * 0.4, 1e-15);
  EXPECT_NEAR(r.quotient(1, 0), 0.4, 1e-15);
  const SymmetricMatrix s = r.symmetrized();
  EXPECT_NEAR(s(0, 1), 1.2 / std::sqrt(3.0), 1e-15);
}

TEST(Quotient, RejectsBadPartitions) {
  const Graph g = path(3);
  const SymmetricMatrix m = b_alpha(g, 0.3);
  EXPECT_THROW(quotient_matrix(m, g, Partition{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(quotient_matrix(m, g, Partition{{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(quotient_matrix(m, g, Partition{{0, 1}, {}, {2}}), std::invalid_argument);
  EXPECT_THROW(quotient_matrix(m, g, Partition{{0, 1}, {2, 3}}), std::invalid_argument);
}

TEST(Determinant, MatchesPermutationExpansion) {
  SeededUniform rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.next_int(1, 7);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = 4.0 * rng.next() - 2.0;
    const double want = static_cast<double>(oracle::permutation_det(m));
    EXPECT_NEAR(determinant(m), want, 1e-10 * (1.0 + std::abs(want)));
  }
}

TEST(Determinant, Singular) {
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = i + j;
  EXPECT_NEAR(determinant(m), 0.0, 1e-12);
}

TEST(BlockDeterminant, RandomInstances) {
  SeededUniform rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = rng.next_int(1, 4);
    std::vector<Matrix> blocks;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      const int s = rng.next_int(1, 3);
      total += s;
      Matrix b(s, s);
      for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) b(r, c) = 2.0 * rng.next() - 1.0;
      blocks.push_back(b);
    }
    Matrix mu(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) mu(i, j) = i == j ? 0.0 : 2.0 * rng.next() - 1.0;
    const BlockDetCheck c = block_det_identity_check(blocks, mu);
    EXPECT_TRUE(c.agree) << c.lhs << " vs " << c.rhs;
    if (total <= 8) {
      // Assemble independently and expand.
      Matrix big(total, total);
      std::vector<int> offset{0};
      for (const Matrix& b : blocks) offset.push_back(offset.back() + b.rows());
      for (int i = 0; i < k; ++i) {
        for (int r = 0; r < blocks[i].rows(); ++r)
          for (int c2 = 0; c2 < blocks[i].rows(); ++c2) big(offset[i] + r, offset[i] + c2) = blocks[i](r, c2);
        for (int j = 0; j < k; ++j)
          if (i != j) big(offset[i + 1] - 1, offset[j + 1] - 1) = mu(i, j);
      }
      EXPECT_NEAR(c.lhs, static_cast<double>(oracle::permutation_det(big)), 1e-10);
    }
  }
}

TEST(BlockDeterminant, ShiftedForm) {
  const Matrix b1(SymmetricMatrix(c_block(2, 3, 0.3)));
  const Matrix b2(SymmetricMatrix(c_block(1, 2, 0.3)));
  Matrix mu(2, 2);
  mu(0, 1) = mu(1, 0) = -0.4;
  const std::vector<Matrix> blocks{b1, b2};
  for (double x : {-1.0, 0.2, 0.7, 2.5}) EXPECT_TRUE(block_det_identity_check(blocks, mu, x).agree);
}

TEST(PendantReduction, StarBlock) {
  const SymmetricMatrix c = c_block(4, 5, 0.3);
  EXPECT_DOUBLE_EQ(c(0, 0), 0.7);
  EXPECT_DOUBLE_EQ(c(0, 1), -0.4 * 2.0);
  EXPECT_DOUBLE_EQ(c(1, 1), 3.5);
}

TEST(PendantReduction, ErrorsWithoutPendants) {
  EXPECT_THROW(pendant_reduction(cycle(5), 0.3), StructureError);
}

TEST(PendantReduction, Kinds) {
  EXPECT_EQ(pendant_reduction(star(3), 0.3).kind, ReductionCase::quasi_only);
  EXPECT_EQ(pendant_reduction(gallery::quasi_pendant_showcase(), 0.3).kind, ReductionCase::quasi_only);
  const PendantReduction r = pendant_reduction(gallery::pendant_showcase(), 0.3);
  EXPECT_EQ(r.kind, ReductionCase::general);
  EXPECT_EQ(r.reduced.order(), 18 + 5 - 9);
  EXPECT_EQ(r.n_matrix.order(), 4);
}

TEST(PendantReduction, SpectrumReconstructs) {
  std::vector<Graph> all = corpus::quasi_only();
  all.insert(all.end(), corpus::general_pendant().begin(), corpus::general_pendant().end());
  for (const Graph& g : all) {
    for (double a : {0.0, 0.25, 0.5, 0.55, 0.9}) {
      const PendantReduction r = pendant_reduction(g, a);
      std::vector<double> rebuilt = eigenvalues(r.reduced);
      rebuilt.insert(rebuilt.end(), static_cast<std::size_t>(r.p - r.q), 1.0 - a);
      EXPECT_LE(multiset_distance(rebuilt, eigenvalues(b_alpha(g, a))), 1e-8) << g.label() << ' ' << a;
    }
  }
}

TEST(PendantReduction, ComponentBlocksArePrincipal) {
  const PendantReduction r = pendant_reduction(gallery::mixed_pendant_showcase(), 0.25);
  int rows = 0;
  for (const auto& n : r.n_components) rows += n.order();
  EXPECT_EQ(rows, r.n_matrix.order());
}
