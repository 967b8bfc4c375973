#include "balpha/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "balpha/builders.hpp"
#include "balpha/eigen.hpp"
#include "balpha/errors.hpp"
#include "balpha/matrix.hpp"

namespace balpha {

SweepTable run_sweep(const Graph& g, double from, double to, int steps) {
  if (!(0.0 <= from && from < to && to <= 1.0)) throw std::invalid_argument("sweep needs 0 <= from < to <= 1");
  if (steps < 2) throw std::invalid_argument("sweep needs steps >= 2");
  SweepTable t;
  t.graph = g.label();
  for (int k = 0; k < steps; ++k) {
    const double a = k == steps - 1 ? to : from + k * (to - from) / (steps - 1);
    t.alphas.push_back(a);
    t.rows.push_back(eigenvalues(b_alpha(g, a)));
  }
  return t;
}

void write_csv(std::ostream& os, const SweepTable& t) {
  const std::size_t n = t.rows.empty() ? 0 : t.rows.front().size();
  os << "alpha";
  for (std::size_t i = 1; i <= n; ++i) os << ",lambda_" << i;
  os << '\n';
  for (std::size_t k = 0; k < t.alphas.size(); ++k) {
    os << format_number(t.alphas[k]);
    for (double x : t.rows[k]) os << ',' << format_number(x);
    os << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

SweepTable read_csv(std::istream& is) {
  SweepTable t;
  std::string line;
  if (!std::getline(is, line)) throw ParseError(0, "empty sweep file");
  const std::vector<std::string> header = split(line);
  if (header.empty() || header.front() != "alpha") throw ParseError(1, "header must start with alpha");
  const std::size_t n = header.size() - 1;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != n + 1) throw ParseError(lineno, "expected " + std::to_string(n + 1) + " fields");
    std::vector<double> values;
    for (const auto& c : cells) {
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), x);
      if (ec != std::errc() || ptr != c.data() + c.size()) throw ParseError(lineno, "bad number '" + c + "'");
      values.push_back(x);
    }
    t.alphas.push_back(values.front());
    t.rows.emplace_back(values.begin() + 1, values.end());
  }
  return t;
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& os, const SweepTable& t) {
  constexpr double W = 640, H = 420, M = 40;
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& row : t.rows) {
    for (double x : row) {
      lo = first ? x : std::min(lo, x);
      hi = first ? x : std::max(hi, x);
      first = false;
    }
  }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double a0 = t.alphas.empty() ? 0.0 : t.alphas.front();
  const double a1 = t.alphas.empty() ? 1.0 : t.alphas.back();
  auto px = [&](double a) { return M + (a - a0) / (a1 - a0) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (y - lo) / (hi - lo) * (H - 2 * M); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<title>" << xml_escape(t.graph) << "</title>\n";
  os << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\"" << H - M
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M
     << "\" stroke=\"black\"/>\n";
  if (lo < 0.0 && hi > 0.0) {
    os << "<line x1=\"" << M << "\" y1=\"" << format_number(py(0.0)) << "\" x2=\"" << W - M << "\" y2=\""
       << format_number(py(0.0)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  os << "<text x=\"" << M << "\" y=\"" << H - M / 4 << "\" font-size=\"12\">alpha " << format_number(a0)
     << "</text>\n";
  os << "<text x=\"" << W - M << "\" y=\"" << H - M / 4 << "\" font-size=\"12\" text-anchor=\"end\">"
     << format_number(a1) << "</text>\n";
  os << "<text x=\"2\" y=\"" << M - 6 << "\" font-size=\"12\">" << format_number(hi) << "</text>\n";
  os << "<text x=\"2\" y=\"" << H - M + 14 << "\" font-size=\"12\">" << format_number(lo) << "</text>\n";

  const std::size_t n = t.rows.empty() ? 0 : t.rows.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    os << "<polyline fill=\"none\" stroke=\"hsl(" << (i * 360 / std::max<std::size_t>(n, 1))
       << ",70%,40%)\" points=\"";
    for (std::size_t k = 0; k < t.alphas.size(); ++k) {
      if (k) os << ' ';
      os << format_number(px(t.alphas[k])) << ',' << format_number(py(t.rows[k][i]));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace balpha
