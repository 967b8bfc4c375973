#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balpha {

enum class MatrixFamily {
  adjacency,
  degree,
  laplacian,
  signless_laplacian,
  b_alpha,
  a_alpha,
  m_alpha,
  reduced,
  quotient,
  custom,
};

std::string_view matrix_family_name(MatrixFamily f);

struct Provenance {
  MatrixFamily family = MatrixFamily::custom;
  double alpha = 0.0;  // meaningful for the alpha-parametrised families only
  std::string source;  // graph label
};

// Dense real symmetric matrix, row-major.
//
// The only mutators write (i, j) and (j, i) together, so entry(i, j) ==
// entry(j, i) holds bit-for-bit at every point of construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n, Provenance provenance = {});

  int order() const { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  void set(int i, int j, double value);
  void add(int i, int j, double value);

  std::span<const double> row(int i) const;
  std::span<const double> data() const { return data_; }

  const Provenance& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  double trace() const;
  double inf_norm() const;        // max absolute row sum
  double frobenius_norm() const;
  bool is_integral() const;       // every entry an exact integer

  SymmetricMatrix scaled(double factor) const;
  SymmetricMatrix shifted(double diagonal_shift) const;  // M + shift * I
  // Principal submatrix on `indices` (in that order).
  SymmetricMatrix principal(std::span<const int> indices) const;

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> data_;
  Provenance provenance_;
};

// General dense matrix, row-major. Used where symmetry does not hold
// (quotients of unequal blocks, determinant identities).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  explicit Matrix(const SymmetricMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::span<const double> data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Plain-text rows, entries formatted %.12g, single-space separated.
void dump(std::ostream& os, const SymmetricMatrix& m);
void dump(std::ostream& os, const Matrix& m);
std::string dump(const SymmetricMatrix& m);

// %.12g, the one numeric text format used for dumps, CSV and reports.
std::string format_number(double x);

}  // namespace balpha
