#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "balpha/generators.hpp"
#include "balpha/graph.hpp"
#include "balpha/verdict.hpp"

namespace balpha {

struct GraphCase {
  Graph graph;
  // Set for generated graphs; enables the family closed forms.
  std::optional<FamilySpec> family;
};

std::vector<double> default_alphas();  // {0, 0.25, 0.45, 0.55, 2/3, 0.8, 1}

struct CampaignOptions {
  std::vector<double> alphas = default_alphas();
  double tol = 1e-10;
  std::set<std::string> skip;  // theorem ids left out of the report
  int max_edges = 30;          // edge-deletion checks per graph and alpha
  int max_rotations = 5;       // edge-rotation triples per graph and alpha
};

struct CampaignResult {
  std::vector<TheoremVerdict> verdicts;  // graph order, then alpha order, then check order

  int failures() const;
  int exit_code() const { return failures() == 0 ? 0 : 1; }
};

// Every applicable checker on every case. Deterministic.
CampaignResult run_campaign(const std::vector<GraphCase>& cases, const CampaignOptions& options = {});

// `trials` G(n, p) graphs; the per-trial seeds come from one mt19937_64
// seeded with `seed`.
std::vector<GraphCase> random_cases(int n, double p, int trials, std::uint64_t seed);

}  // namespace balpha
