#pragma once

#include <optional>
#include <span>
#include <vector>

#include "balpha/matrix.hpp"

namespace balpha {

struct EigenGroup {
  double value = 0.0;  // mean of the grouped eigenvalues
  int multiplicity = 0;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // non-increasing
  // Column k is the unit eigenvector of eigenvalues[k]; its largest-magnitude
  // entry is positive. Empty unless requested.
  Matrix eigenvectors;
  double group_tol = 0.0;
  std::vector<EigenGroup> groups;
  double source_norm = 0.0;  // ||M||_inf
  double trace = 0.0;        // trace of the source matrix
  double max_residual = 0.0; // max_k ||M v_k - lambda_k v_k||_2
  int sweeps = 0;

  int order() const { return static_cast<int>(eigenvalues.size()); }
  double largest() const { return eigenvalues.front(); }
  double smallest() const { return eigenvalues.back(); }
  // 1-based, as in lambda_k.
  double lambda(int k) const { return eigenvalues.at(static_cast<std::size_t>(k - 1)); }
};

struct EigenOptions {
  double tol = 1e-11;
  bool vectors = false;
  std::optional<double> group_tol;  // default 1e-7 (1 + ||M||_inf)
  int max_sweeps = 60;
};

// Cyclic Jacobi. Every pair satisfies ||Mv - lambda v|| <= tol n (1 + ||M||_inf)
// and the eigenvalues sum to the trace within 1e-9 (1 + |trace|); otherwise
// NumericError.
Spectrum sym_eig(const SymmetricMatrix& m, const EigenOptions& options = {});
std::vector<double> eigenvalues(const SymmetricMatrix& m);

int multiplicity_of(const Spectrum& s, double value, double tol);

// det(xI - M) by fraction-free elimination, n <= 12. Integer matrices are
// evaluated exactly (x is a dyadic rational) and rounded once at the end, so
// the sign is always right.
double char_poly_eval(const SymmetricMatrix& m, double x);
// x^T M x / x^T x. Zero vector -> std::invalid_argument.
double rayleigh(const SymmetricMatrix& m, std::span<const double> x);

}  // namespace balpha
