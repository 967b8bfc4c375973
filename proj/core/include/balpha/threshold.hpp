#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balpha/graph.hpp"

namespace balpha {

enum class Method { bisection, closed_form, definitional };
std::string_view method_name(Method m);

struct Bisection {
  double value = 0.0;  // bracket midpoint
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  Method method = Method::bisection;
  double certificate = 0.0;  // lambda_n at `value`
};

struct ThresholdReport {
  std::string graph;
  Bisection beta0;
  Bisection alpha0;
  double epsilon = 0.0;
  double tol = 0.0;
};

// (alpha, lambda_n(B_alpha)) per grid point.
std::vector<std::pair<double, double>> lambda_min_curve(const Graph& g, const std::vector<double>& grid);

// Largest alpha with B_alpha positive semidefinite, by bisection on [2/3, 1].
// Edgeless graphs return 1 (definitional). A NumericError is thrown when
// |lambda_n(B_beta0)| exceeds 1e-7 plus 3 Delta times the half-bracket.
Bisection beta0(const Graph& g, double tol = 1e-10);
// Smallest alpha with A_alpha positive semidefinite, by bisection on [0, 1/2].
// Edgeless graphs return 0 (definitional).
Bisection alpha0(const Graph& g, double tol = 1e-10);
ThresholdReport threshold_report(const Graph& g, double tol = 1e-10);
double epsilon(const Graph& g, double tol = 1e-10);

enum class ClosedFormFamily { complete, bipartite, hln };

struct ClosedForm {
  double beta0 = 0.0;
  double alpha0 = 0.0;
  double epsilon = 0.0;  // the printed epsilon formula, not beta0 - alpha0
};

// K_n (n >= 2), any bipartite graph, or h_ln(n, ell) (n >= 3, 1 <= ell <= n);
// for h_ln the ell = 1 radical formulas are used when ell == 1.
ClosedForm closed_forms(ClosedFormFamily family, int n = 0, int ell = 0);

// beta0 - alpha0 - epsilon for the three printed ell = 1 formulas.
double hln1_consistency(int n);

std::string threshold_csv_header();
// graph_id,beta0,alpha0,epsilon,method_beta0,iters,tol
std::string threshold_csv_row(const ThresholdReport& r);

}  // namespace balpha
