#include "balpha/determinant.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace balpha {

double determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  std::vector<long double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> long double& { return a[static_cast<std::size_t>(i) * n + j]; };
  long double det = 1.0L;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(at(i, k)) > std::fabs(at(piv, k))) piv = i;
    if (at(piv, k) == 0.0L) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      det = -det;
    }
    det *= at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const long double f = at(i, k) / at(k, k);
      for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return static_cast<double>(det);
}

BlockDetCheck block_det_identity_check(std::span<const Matrix> blocks, const Matrix& mu,
                                       std::optional<double> shift) {
  const int m = static_cast<int>(blocks.size());
  if (mu.rows() != m || mu.cols() != m) throw std::invalid_argument("coupling matrix must be m x m");

  std::vector<Matrix> eff;
  std::vector<int> offset;
  int total = 0;
  for (const Matrix& b : blocks) {
    if (b.rows() != b.cols() || b.rows() < 1) throw std::invalid_argument("blocks must be square, k >= 1");
    Matrix e = b;
    if (shift) {
      for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) e(i, j) = (i == j ? *shift : 0.0) - b(i, j);
    }
    offset.push_back(total);
    total += e.rows();
    eff.push_back(std::move(e));
  }

  Matrix big(total, total);
  for (int i = 0; i < m; ++i) {
    const int k = eff[i].rows();
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) big(offset[i] + r, offset[i] + c) = eff[i](r, c);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) big(offset[i] + eff[i].rows() - 1, offset[j] + eff[j].rows() - 1) = mu(i, j);

  std::vector<double> full(m), trimmed(m);
  for (int i = 0; i < m; ++i) {
    full[i] = determinant(eff[i]);
    const int k = eff[i].rows();
    if (k == 1) {
      trimmed[i] = 1.0;
    } else {
      Matrix t(k - 1, k - 1);
      for (int r = 0; r < k - 1; ++r)
        for (int c = 0; c < k - 1; ++c) t(r, c) = eff[i](r, c);
      trimmed[i] = determinant(t);
    }
  }
  Matrix small(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) small(i, j) = i == j ? full[i] : mu(i, j) * trimmed[j];

  BlockDetCheck out;
  out.lhs = determinant(big);
  out.rhs = determinant(small);
  out.agree = std::abs(out.lhs - out.rhs) <= 1e-8 * (1.0 + std::abs(out.lhs));
  return out;
}

}  // namespace balpha
