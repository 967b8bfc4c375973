#include "balpha/builders.hpp"

#include <cmath>
#include <stdexcept>

#include "balpha/errors.hpp"

namespace balpha {

namespace {

Provenance tag(const Graph& g, MatrixFamily family, double alpha = 0.0) {
  return Provenance{family, alpha, g.label()};
}

// diag_weight * D + off_weight * A
SymmetricMatrix degree_adjacency(const Graph& g, double diag_weight, double off_weight,
                                 Provenance prov) {
  SymmetricMatrix m(g.order(), std::move(prov));
  for (int v = 0; v < g.order(); ++v) m.set(v, v, diag_weight * g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, off_weight);
  return m;
}

}  // namespace

SymmetricMatrix build_base(const Graph& g, BaseMatrix which) {
  switch (which) {
    case BaseMatrix::adjacency:
      return degree_adjacency(g, 0.0, 1.0, tag(g, MatrixFamily::adjacency));
    case BaseMatrix::degree:
      return degree_adjacency(g, 1.0, 0.0, tag(g, MatrixFamily::degree));
    case BaseMatrix::laplacian:
      return degree_adjacency(g, 1.0, -1.0, tag(g, MatrixFamily::laplacian));
    case BaseMatrix::signless_laplacian:
      return degree_adjacency(g, 1.0, 1.0, tag(g, MatrixFamily::signless_laplacian));
  }
  throw std::invalid_argument("unknown base matrix");
}

SymmetricMatrix b_alpha(const Graph& g, double alpha) {
  return degree_adjacency(g, 1.0 - alpha, 2.0 * alpha - 1.0, tag(g, MatrixFamily::b_alpha, alpha));
}

SymmetricMatrix b_alpha_convex(const Graph& g, double alpha) {
  const SymmetricMatrix a = build_base(g, BaseMatrix::adjacency);
  const SymmetricMatrix l = build_base(g, BaseMatrix::laplacian);
  SymmetricMatrix m(g.order(), tag(g, MatrixFamily::b_alpha, alpha));
  for (int i = 0; i < g.order(); ++i)
    for (int j = i; j < g.order(); ++j) m.set(i, j, alpha * a(i, j) + (1.0 - alpha) * l(i, j));
  return m;
}

SymmetricMatrix a_alpha(const Graph& g, double alpha) {
  return degree_adjacency(g, alpha, 1.0 - alpha, tag(g, MatrixFamily::a_alpha, alpha));
}

std::pair<SymmetricMatrix, SymmetricMatrix> a_alpha_and_m_alpha(const Graph& g, double alpha) {
  return {a_alpha(g, alpha), degree_adjacency(g, 1.0, alpha, tag(g, MatrixFamily::m_alpha, alpha))};
}

QuadraticForm quadratic_form_routes(const Graph& g, double alpha, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.order()) {
    throw std::invalid_argument("quadratic_form: vector length must equal graph order");
  }
  const SymmetricMatrix b = b_alpha(g, alpha);
  const double gamma = 2.0 * alpha - 1.0;

  QuadraticForm out{0.0, 0.0, 0.0};
  for (int i = 0; i < g.order(); ++i) {
    double row = 0.0;
    for (int j = 0; j < g.order(); ++j) row += b(i, j) * x[j];
    out.direct += x[i] * row;
  }

  double diag = 0.0;
  for (int v = 0; v < g.order(); ++v) diag += g.degree(v) * x[v] * x[v];
  double cross = 0.0;
  for (auto [u, v] : g.edges()) {
    cross += x[u] * x[v];
    out.per_edge += (1.0 - alpha) * x[u] * x[u] + 2.0 * gamma * x[u] * x[v] +
                    (1.0 - alpha) * x[v] * x[v];
  }
  out.degree_sum = (1.0 - alpha) * diag + 2.0 * gamma * cross;

  double norm2 = 0.0;
  for (double xi : x) norm2 += xi * xi;
  const double tol = 1e-10 * (1.0 + b.inf_norm() * norm2);
  if (std::abs(out.direct - out.degree_sum) > tol || std::abs(out.direct - out.per_edge) > tol) {
    throw ConsistencyError("quadratic form routes disagree: direct=" + format_number(out.direct) +
                           " degree_sum=" + format_number(out.degree_sum) +
                           " per_edge=" + format_number(out.per_edge));
  }
  return out;
}

double quadratic_form(const Graph& g, double alpha, std::span<const double> x) {
  return quadratic_form_routes(g, alpha, x).direct;
}

}  // namespace balpha
