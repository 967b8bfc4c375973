#include "balpha/threshold.hpp"

#include <cmath>
#include <stdexcept>

#include "balpha/builders.hpp"
#include "balpha/eigen.hpp"
#include "balpha/errors.hpp"
#include "balpha/matrix.hpp"

namespace balpha {

namespace {

double lambda_min(const SymmetricMatrix& m) { return sym_eig(m).smallest(); }

// Shrinks [lo, hi] until it is at most tol wide; `below(mid)` says the
// threshold lies above mid.
template <typename Pred>
Bisection bisect(double lo, double hi, double tol, Pred below) {
  Bisection b;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (below(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++b.iterations;
  }
  b.lo = lo;
  b.hi = hi;
  b.value = 0.5 * (lo + hi);
  return b;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::bisection: return "bisection";
    case Method::closed_form: return "closed_form";
    case Method::definitional: return "definitional";
  }
  return "bisection";
}

std::vector<std::pair<double, double>> lambda_min_curve(const Graph& g, const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> out;
  for (double a : grid) {
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("lambda_min_curve: alpha outside [0, 1]");
    out.emplace_back(a, lambda_min(b_alpha(g, a)));
  }
  return out;
}

Bisection beta0(const Graph& g, double tol) {
  if (g.size() == 0) {
    Bisection b;
    b.value = b.lo = b.hi = 1.0;
    b.method = Method::definitional;
    return b;
  }
  // lambda_n(B_alpha) is concave in alpha, >= 0 at 2/3 and < 0 at 1, so the
  // sign change on [2/3, 1] is unique.
  Bisection b = bisect(2.0 / 3.0, 1.0, tol, [&](double a) {
    const SymmetricMatrix m = b_alpha(g, a);
    return lambda_min(m) >= -1e-12 * (1.0 + m.inf_norm());
  });
  b.certificate = lambda_min(b_alpha(g, b.value));
  // |d lambda_n / d alpha| <= ||2A - D|| <= 3 Delta, so a wide bracket earns slack.
  const double slack = 3.0 * g.max_degree() * (b.hi - b.lo) / 2.0;
  if (std::abs(b.certificate) > 1e-7 + slack) {
    throw NumericError("beta0: lambda_n at the bracket midpoint is " + format_number(b.certificate));
  }
  return b;
}

Bisection alpha0(const Graph& g, double tol) {
  if (g.size() == 0) {
    Bisection b;
    b.method = Method::definitional;
    return b;
  }
  // lambda_n(A_alpha) is nondecreasing in alpha: <= 0 at 0 and >= 0 at 1/2.
  Bisection b = bisect(0.0, 0.5, tol, [&](double a) {
    const SymmetricMatrix m = a_alpha(g, a);
    return lambda_min(m) < -1e-12 * (1.0 + m.inf_norm());
  });
  b.certificate = lambda_min(a_alpha(g, b.value));
  return b;
}

ThresholdReport threshold_report(const Graph& g, double tol) {
  ThresholdReport r;
  r.graph = g.label();
  r.tol = tol;
  r.beta0 = beta0(g, tol);
  r.alpha0 = alpha0(g, tol);
  r.epsilon = r.beta0.value - r.alpha0.value;
  return r;
}

double epsilon(const Graph& g, double tol) { return threshold_report(g, tol).epsilon; }

ClosedForm closed_forms(ClosedFormFamily family, int n, int ell) {
  ClosedForm c;
  switch (family) {
    case ClosedFormFamily::complete: {
      if (n < 2) throw std::invalid_argument("closed_forms: K_n needs n >= 2");
      const double x = n;
      c.beta0 = x / (x + 1);
      c.alpha0 = 1.0 / x;
      c.epsilon = (x * x - x - 1) / (x * (x + 1));
      return c;
    }
    case ClosedFormFamily::bipartite:
      c.beta0 = 2.0 / 3.0;
      c.alpha0 = 0.5;
      c.epsilon = 1.0 / 6.0;
      return c;
    case ClosedFormFamily::hln: {
      if (n < 3 || ell < 1 || ell > n) throw std::invalid_argument("closed_forms: h_ln needs n >= 3, 1 <= ell <= n");
      const double x = n;
      if (ell >= 2) {
        c.beta0 = (x + 2) / (x + 4);
        c.alpha0 = 2 / (x + 2);
        c.epsilon = x / (x + 4) - 4 / ((x + 4) * (x + 2));
        return c;
      }
      const double root = std::sqrt(x * x * x * x + 2 * x * x * x - 9 * x * x + 6 * x + 1);
      c.beta0 = (x * x + x - 9 + root) / (2 * (x * x + 3 * x - 10));
      c.alpha0 = (-x * x - x + 5 + std::sqrt(x * (x - 1) * (x * x + 3 * x - 6) + 1)) / 4;
      c.epsilon = (x * x + x - 3) / 4 + (2 - 4 * x + (12 - x * x - 3 * x) * root) / (4 * (x + 5) * (x - 2));
      return c;
    }
  }
  throw std::invalid_argument("closed_forms: unknown family");
}

double hln1_consistency(int n) {
  const ClosedForm c = closed_forms(ClosedFormFamily::hln, n, 1);
  return c.beta0 - c.alpha0 - c.epsilon;
}

std::string threshold_csv_header() { return "graph_id,beta0,alpha0,epsilon,method_beta0,iters,tol"; }

std::string threshold_csv_row(const ThresholdReport& r) {
  return r.graph + ',' + format_number(r.beta0.value) + ',' + format_number(r.alpha0.value) + ',' +
         format_number(r.epsilon) + ',' + std::string(method_name(r.beta0.method)) + ',' +
         std::to_string(r.beta0.iterations) + ',' + format_number(r.tol);
}

}  // namespace balpha
