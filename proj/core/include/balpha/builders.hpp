#pragma once

#include <span>
#include <utility>

#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"

namespace balpha {

enum class BaseMatrix { adjacency, degree, laplacian, signless_laplacian };

// A, D, L = D - A or Q = D + A; entries are exact small integers.
SymmetricMatrix build_base(const Graph& g, BaseMatrix which);

// B_alpha = (1 - alpha) D + (2 alpha - 1) A. Alpha outside [0, 1] is
// accepted; out_of_unit_range() tells callers to flag it.
SymmetricMatrix b_alpha(const Graph& g, double alpha);
// Second assembly route, alpha A + (1 - alpha) L, for cross-checks.
SymmetricMatrix b_alpha_convex(const Graph& g, double alpha);

// A_alpha = alpha D + (1 - alpha) A, and M_alpha = alpha A + D.
// B_alpha = M_alpha - A_alpha entrywise.
std::pair<SymmetricMatrix, SymmetricMatrix> a_alpha_and_m_alpha(const Graph& g, double alpha);
SymmetricMatrix a_alpha(const Graph& g, double alpha);

constexpr bool out_of_unit_range(double alpha) { return alpha < 0.0 || alpha > 1.0; }

struct QuadraticForm {
  double direct;      // x^T B_alpha x
  double degree_sum;  // (1-a) sum d(u) x_u^2 + 2(2a-1) sum_{uv in E} x_u x_v
  double per_edge;    // sum_{uv in E} ((1-a) x_u^2 + 2(2a-1) x_u x_v + (1-a) x_v^2)
};

// All three evaluations of <B_alpha x, x>. Throws ConsistencyError when they
// disagree by more than 1e-10 (1 + ||B_alpha||_inf ||x||^2).
QuadraticForm quadratic_form_routes(const Graph& g, double alpha, std::span<const double> x);
double quadratic_form(const Graph& g, double alpha, std::span<const double> x);

}  // namespace balpha
