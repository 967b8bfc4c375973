#include "balpha/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace balpha {

std::string_view matrix_family_name(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::adjacency: return "A";
    case MatrixFamily::degree: return "D";
    case MatrixFamily::laplacian: return "L";
    case MatrixFamily::signless_laplacian: return "Q";
    case MatrixFamily::b_alpha: return "B_alpha";
    case MatrixFamily::a_alpha: return "A_alpha";
    case MatrixFamily::m_alpha: return "M_alpha";
    case MatrixFamily::reduced: return "reduced";
    case MatrixFamily::quotient: return "quotient";
    case MatrixFamily::custom: return "custom";
  }
  return "custom";
}

SymmetricMatrix::SymmetricMatrix(int n, Provenance provenance)
    : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0),
      provenance_(std::move(provenance)) {
  if (n < 0) throw std::invalid_argument("matrix order must be non-negative");
}

void SymmetricMatrix::set(int i, int j, double value) {
  data_[index(i, j)] = value;
  data_[index(j, i)] = value;
}

void SymmetricMatrix::add(int i, int j, double value) {
  data_[index(i, j)] += value;
  if (i != j) data_[index(j, i)] += value;
}

std::span<const double> SymmetricMatrix::row(int i) const {
  return std::span<const double>(data_).subspan(index(i, 0), static_cast<std::size_t>(n_));
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (double x : row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

bool SymmetricMatrix::is_integral() const {
  for (double x : data_) {
    if (!std::isfinite(x) || x != std::nearbyint(x)) return false;
  }
  return true;
}

SymmetricMatrix SymmetricMatrix::scaled(double factor) const {
  SymmetricMatrix out = *this;
  for (double& x : out.data_) x *= factor;
  return out;
}

SymmetricMatrix SymmetricMatrix::shifted(double diagonal_shift) const {
  SymmetricMatrix out = *this;
  for (int i = 0; i < n_; ++i) out.data_[index(i, i)] += diagonal_shift;
  return out;
}

SymmetricMatrix SymmetricMatrix::principal(std::span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  SymmetricMatrix out(k, provenance_);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) out.set(a, b, (*this)(indices[a], indices[b]));
  return out;
}

Matrix::Matrix(const SymmetricMatrix& m) : Matrix(m.order(), m.order()) {
  std::copy(m.data().begin(), m.data().end(), data_.begin());
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  // Avoid "-0" in golden files.
  if (buf[0] == '-' && buf[1] == '0' && buf[2] == '\0') return "0";
  return buf;
}

namespace {

template <typename M>
void dump_rows(std::ostream& os, const M& m, int rows, int cols) {
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ' ';
      os << format_number(m(i, j));
    }
    os << '\n';
  }
}

}  // namespace

void dump(std::ostream& os, const SymmetricMatrix& m) { dump_rows(os, m, m.order(), m.order()); }
void dump(std::ostream& os, const Matrix& m) { dump_rows(os, m, m.rows(), m.cols()); }

std::string dump(const SymmetricMatrix& m) {
  std::ostringstream os;
  dump(os, m);
  return os.str();
}

}  // namespace balpha
