#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "balpha/graph.hpp"

namespace balpha {

// Sorted B_alpha spectra over an alpha grid.
struct SweepTable {
  std::string graph;
  std::vector<double> alphas;             // strictly increasing
  std::vector<std::vector<double>> rows;  // rows[k] = eigenvalues at alphas[k], non-increasing
};

// alpha_k = from + k (to - from) / (steps - 1), k = 0..steps-1, with the last
// point exactly `to`. Requires 0 <= from < to <= 1 and steps >= 2.
SweepTable run_sweep(const Graph& g, double from, double to, int steps);

// Header alpha,lambda_1,...,lambda_n then one row per grid point.
void write_csv(std::ostream& os, const SweepTable& t);
// Inverse of write_csv; throws ParseError on malformed input.
SweepTable read_csv(std::istream& is);

// One polyline per eigenvalue index over linear axes.
void write_svg(std::ostream& os, const SweepTable& t);

}  // namespace balpha
