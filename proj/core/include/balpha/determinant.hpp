#pragma once

#include <optional>
#include <span>

#include "balpha/matrix.hpp"

namespace balpha {

// LU with partial pivoting, accumulated in long double.
double determinant(const Matrix& m);

struct BlockDetCheck {
  double lhs = 0.0;  // determinant of the assembled block matrix
  double rhs = 0.0;  // m x m determinant of block determinants
  bool agree = false;
};

// Determinant identity for block matrices coupled only through the last
// row/column of each block: the assembled matrix has M_i on the diagonal and
// mu(i, j) R off the diagonal (R is zero except its bottom-right entry), and
// its determinant equals det(T) with T(i, i) = |M_i|, T(i, j) = mu(i, j)|M~_j|,
// where M~_j drops the last row and column (|M~_j| = 1 for a 1x1 block).
//
// With `shift` set, every block is replaced by shift * I - M_i, which is the
// form used for characteristic polynomials. The diagonal of mu is ignored.
// Agreement means |lhs - rhs| <= 1e-8 (1 + |lhs|).
BlockDetCheck block_det_identity_check(std::span<const Matrix> blocks, const Matrix& mu,
                                       std::optional<double> shift = std::nullopt);

}  // namespace balpha
