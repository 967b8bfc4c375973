#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace balpha {

enum class Status { pass, fail, vacuous, inconclusive };

std::string_view status_name(Status s);

// Outcome of one executable theorem check.
//
// `gap` is signed so that positive means "holds with room to spare"; for
// equalities it is minus the absolute discrepancy.
struct TheoremVerdict {
  std::string theorem;
  std::string graph;
  std::optional<double> alpha;  // unset for alpha-independent checks
  bool hypotheses_satisfied = true;
  Status status = Status::pass;
  std::vector<double> predicted;
  std::vector<double> observed;
  double gap = 0.0;
  double tolerance = 0.0;
  std::string detail;

  bool failed() const { return status == Status::fail; }
};

// THEOREM<tab>graph<tab>alpha<tab>STATUS<tab>gap (alpha "-" when unset).
std::string format_report_line(const TheoremVerdict& v);

// Margins for strict inequalities: a gap above kStrictGap is a pass, a gap in
// [-kStrictMargin, kStrictGap] cannot be certified either way.
inline constexpr double kStrictGap = 1e-9;
inline constexpr double kStrictMargin = 1e-12;

// lhs > rhs, judged with the margins above.
Status strict_greater(double lhs, double rhs);
// lhs >= rhs - tol.
Status weak_greater(double lhs, double rhs, double tol);
// |lhs - rhs| <= tol.
Status approx_equal(double lhs, double rhs, double tol);

TheoremVerdict vacuous(std::string theorem, std::string graph, std::optional<double> alpha,
                       std::string detail);

}  // namespace balpha
