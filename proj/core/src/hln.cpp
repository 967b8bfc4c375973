#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "balpha/builders.hpp"
#include "balpha/generators.hpp"
#include "balpha/theorems.hpp"

namespace balpha {

std::vector<EigenGroup> hln_spectrum(int n, int ell, double a) {
  if (n < 3 || ell < 1 || ell > n) throw std::invalid_argument("hln_spectrum: need n >= 3, 1 <= ell <= n");
  std::vector<EigenGroup> out;
  auto add = [&](double value, int mult) {
    if (mult > 0) out.push_back({value, mult});
  };
  const double g = 2.0 * a - 1.0;
  if (ell == n) {
    add(n * a, 1);
    add(2.0 + a * (n - 4), 1);
    add(n + 2 - a * (n + 4), n - 1);
    add(n - a * n, n - 1);
    return out;
  }
  add(n - a * (n + 1), 2 * n - 2 * ell - 2);
  add(n + 2 - a * (n + 4), ell - 1);
  add(n - a * n, ell - 1);
  const double d1 = std::sqrt(std::max(0.0, g * (4 * a * ell - 2 * a * n) + n * n * g * g + a * a));
  const double d2 = std::sqrt(std::max(
      0.0, g * ((3 * a - 2) * (-4 * ell + 2 * n) + n * n * g) + (3 * a - 2) * (3 * a - 2)));
  add(0.5 * (n - a - d1), 1);
  add(0.5 * (n - a + d1), 1);
  add(0.5 * (n - 5 * a + 2 - d2), 1);
  add(0.5 * (n - 5 * a + 2 + d2), 1);
  return out;
}

std::vector<EigenGroup> complete_spectrum(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("complete_spectrum: n >= 2");
  return {{alpha * (n - 1), 1}, {n - alpha * (n + 1), n - 1}};
}

std::vector<double> expand(const std::vector<EigenGroup>& groups) {
  std::vector<double> out;
  for (const auto& gr : groups) out.insert(out.end(), static_cast<std::size_t>(gr.multiplicity), gr.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TheoremVerdict hln_spectrum_check(int n, int ell, double alpha) {
  const Graph g = h_ln(n, ell);
  const std::vector<double> predicted = expand(hln_spectrum(n, ell, alpha));
  const std::vector<double> observed = eigenvalues(b_alpha(g, alpha));
  TheoremVerdict v;
  v.theorem = "hln_spectrum";
  v.graph = g.label();
  v.alpha = alpha;
  const double dist = multiset_distance(predicted, observed);
  v.predicted = predicted;
  v.observed = observed;
  v.gap = -dist;
  v.tolerance = kSpectrumTol;
  v.status = dist <= kSpectrumTol ? Status::pass : Status::fail;
  return v;
}

TheoremVerdict nonmonotonicity_witness(int n, int samples) {
  if (samples < 3) throw std::invalid_argument("nonmonotonicity_witness: samples >= 3");
  const Graph g = complete(n);
  double rise_top = 0.0, fall_top = 0.0, rise_bottom = 0.0, fall_bottom = 0.0;
  double prev_top = 0.0, prev_bottom = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double alpha = static_cast<double>(k) / (samples - 1);
    const Spectrum s = sym_eig(b_alpha(g, alpha));
    if (k > 0) {
      rise_top = std::max(rise_top, s.largest() - prev_top);
      fall_top = std::max(fall_top, prev_top - s.largest());
      rise_bottom = std::max(rise_bottom, s.smallest() - prev_bottom);
      fall_bottom = std::max(fall_bottom, prev_bottom - s.smallest());
    }
    prev_top = s.largest();
    prev_bottom = s.smallest();
  }
  TheoremVerdict v;
  v.theorem = "nonmonotonicity";
  v.graph = g.label();
  v.observed = {rise_top, fall_top, rise_bottom, fall_bottom};
  v.gap = std::min({rise_top, fall_top, rise_bottom, fall_bottom});
  v.tolerance = kStrictGap;
  v.status = v.gap > kStrictGap ? Status::pass : Status::fail;
  v.detail = "lambda_1 and lambda_n both rise and fall";
  return v;
}

}  // namespace balpha
