#include "balpha/verdict.hpp"

#include <cmath>

#include "balpha/matrix.hpp"

namespace balpha {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::vacuous: return "VACUOUS";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

std::string format_report_line(const TheoremVerdict& v) {
  std::string line = v.theorem;
  line += '\t';
  line += v.graph;
  line += '\t';
  line += v.alpha ? format_number(*v.alpha) : "-";
  line += '\t';
  line += status_name(v.status);
  line += '\t';
  line += format_number(v.gap);
  return line;
}

Status strict_greater(double lhs, double rhs) {
  const double gap = lhs - rhs;
  if (gap > kStrictGap) return Status::pass;
  if (gap >= -kStrictMargin) return Status::inconclusive;
  return Status::fail;
}

Status weak_greater(double lhs, double rhs, double tol) {
  return lhs >= rhs - tol ? Status::pass : Status::fail;
}

Status approx_equal(double lhs, double rhs, double tol) {
  return std::abs(lhs - rhs) <= tol ? Status::pass : Status::fail;
}

TheoremVerdict vacuous(std::string theorem, std::string graph, std::optional<double> alpha,
                       std::string detail) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  v.graph = std::move(graph);
  v.alpha = alpha;
  v.hypotheses_satisfied = false;
  v.status = Status::vacuous;
  v.detail = std::move(detail);
  return v;
}

}  // namespace balpha
