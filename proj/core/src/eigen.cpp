#include "balpha/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "balpha/errors.hpp"

namespace balpha {

namespace {

struct JacobiResult {
  std::vector<double> d;
  std::vector<double> v;  // n x n, column k pairs with d[k]
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi on the upper triangle with the usual threshold strategy for the
// first sweeps and underflow-to-zero once off-diagonal entries are negligible.
JacobiResult jacobi(const SymmetricMatrix& m, int max_sweeps) {
  const int n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  JacobiResult r;
  r.v.assign(static_cast<std::size_t>(n) * n, 0.0);
  auto V = [&](int i, int j) -> double& { return r.v[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) V(i, i) = 1.0;

  r.d.resize(n);
  std::vector<double> b(n), z(n, 0.0);
  for (int i = 0; i < n; ++i) b[i] = r.d[i] = A(i, i);

  auto rotate = [](double& x, double& y, double s, double tau) {
    const double g = x;
    const double h = y;
    x = g - s * (h + g * tau);
    y = h + s * (g - h * tau);
  };

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double sm = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) sm += std::abs(A(p, q));
    r.sweeps = sweep - 1;
    if (sm == 0.0) {
      r.converged = true;
      return r;
    }
    const double tresh = sweep < 4 ? 0.2 * sm / (static_cast<double>(n) * n) : 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(A(p, q));
        if (sweep > 4 && std::abs(r.d[p]) + g == std::abs(r.d[p]) &&
            std::abs(r.d[q]) + g == std::abs(r.d[q])) {
          A(p, q) = 0.0;
          continue;
        }
        if (std::abs(A(p, q)) <= tresh) continue;
        double h = r.d[q] - r.d[p];
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = A(p, q) / h;
        } else {
          const double theta = 0.5 * h / A(p, q);
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        h = t * A(p, q);
        z[p] -= h;
        z[q] += h;
        r.d[p] -= h;
        r.d[q] += h;
        A(p, q) = 0.0;
        for (int j = 0; j < p; ++j) rotate(A(j, p), A(j, q), s, tau);
        for (int j = p + 1; j < q; ++j) rotate(A(p, j), A(j, q), s, tau);
        for (int j = q + 1; j < n; ++j) rotate(A(p, j), A(q, j), s, tau);
        for (int j = 0; j < n; ++j) rotate(V(j, p), V(j, q), s, tau);
      }
    }
    for (int p = 0; p < n; ++p) {
      b[p] += z[p];
      r.d[p] = b[p];
      z[p] = 0.0;
    }
  }
  r.sweeps = max_sweeps;
  return r;
}

std::vector<EigenGroup> make_groups(const std::vector<double>& sorted, double tol) {
  std::vector<EigenGroup> groups;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    if (k < sorted.size() && sorted[k - 1] - sorted[k] <= tol) continue;
    double sum = 0.0;
    for (std::size_t i = start; i < k; ++i) sum += sorted[i];
    groups.push_back({sum / static_cast<double>(k - start), static_cast<int>(k - start)});
    start = k;
  }
  return groups;
}

using boost::multiprecision::cpp_int;

// Bareiss elimination; every division is exact for integer input.
template <typename T>
T bareiss(std::vector<T> a, int n) {
  auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * n + j]; };
  T prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = k;
    if constexpr (std::is_floating_point_v<T>) {
      for (int i = k + 1; i < n; ++i)
        if (std::fabs(at(i, k)) > std::fabs(at(piv, k))) piv = i;
    } else {
      while (piv < n && at(piv, k) == 0) ++piv;
      if (piv == n) return T(0);
    }
    if (at(piv, k) == T(0)) return T(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  T det = at(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

// value * 2^-shift as the nearest-below double; exact sign.
double scaled_to_double(const cpp_int& value, long shift) {
  if (value == 0) return 0.0;
  const bool negative = value < 0;
  cpp_int mag = negative ? cpp_int(-value) : value;
  const long bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
  long drop = std::max(0L, bits - 62);
  const auto top = static_cast<std::int64_t>(mag >> drop);
  const double out = std::ldexp(static_cast<double>(top), static_cast<int>(drop - shift));
  return negative ? -out : out;
}

}  // namespace

Spectrum sym_eig(const SymmetricMatrix& m, const EigenOptions& options) {
  const int n = m.order();
  Spectrum s;
  s.source_norm = m.inf_norm();
  s.trace = m.trace();
  s.group_tol = options.group_tol.value_or(1e-7 * (1.0 + s.source_norm));
  if (n == 0) return s;

  for (double x : m.data()) {
    if (!std::isfinite(x)) throw NumericError("sym_eig: non-finite matrix entry");
  }

  JacobiResult jr = jacobi(m, options.max_sweeps);
  s.sweeps = jr.sweeps;
  auto V = [&](int i, int k) { return jr.v[static_cast<std::size_t>(i) * n + k]; };

  // Phase: the first entry within 1e-10 of the largest magnitude is made positive.
  for (int k = 0; k < n; ++k) {
    double big = 0.0;
    for (int i = 0; i < n; ++i) big = std::max(big, std::abs(V(i, k)));
    for (int i = 0; i < n; ++i) {
      if (std::abs(V(i, k)) >= big - 1e-10) {
        if (V(i, k) < 0.0)
          for (int j = 0; j < n; ++j) jr.v[static_cast<std::size_t>(j) * n + k] = -V(j, k);
        break;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (jr.d[a] != jr.d[b]) return jr.d[a] > jr.d[b];
    for (int i = 0; i < n; ++i) {
      if (V(i, a) != V(i, b)) return V(i, a) < V(i, b);
    }
    return a < b;
  });

  s.eigenvalues.resize(n);
  Matrix vecs(n, n);
  for (int k = 0; k < n; ++k) {
    s.eigenvalues[k] = jr.d[order[k]];
    for (int i = 0; i < n; ++i) vecs(i, k) = V(i, order[k]);
  }

  for (int k = 0; k < n; ++k) {
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += m(i, j) * vecs(j, k);
      const double e = row - s.eigenvalues[k] * vecs(i, k);
      res += e * e;
    }
    s.max_residual = std::max(s.max_residual, std::sqrt(res));
  }
  const double bound = options.tol * n * (1.0 + s.source_norm);
  if (!jr.converged || s.max_residual > bound) {
    throw NumericError("sym_eig: no convergence after " + std::to_string(jr.sweeps) +
                       " sweeps, residual " + format_number(s.max_residual) + " > " +
                       format_number(bound));
  }
  const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
  if (std::abs(sum - s.trace) > 1e-9 * (1.0 + std::abs(s.trace))) {
    throw NumericError("sym_eig: eigenvalue sum " + format_number(sum) + " != trace " +
                       format_number(s.trace));
  }

  s.groups = make_groups(s.eigenvalues, s.group_tol);
  if (options.vectors) s.eigenvectors = std::move(vecs);
  return s;
}

std::vector<double> eigenvalues(const SymmetricMatrix& m) { return sym_eig(m).eigenvalues; }

int multiplicity_of(const Spectrum& s, double value, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("multiplicity_of: tol must be positive");
  return static_cast<int>(std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                        [&](double l) { return std::abs(l - value) <= tol; }));
}

double char_poly_eval(const SymmetricMatrix& m, double x) {
  const int n = m.order();
  if (n > 12) throw std::invalid_argument("char_poly_eval: order above 12");
  if (!std::isfinite(x)) throw std::invalid_argument("char_poly_eval: non-finite x");
  if (n == 0) return 1.0;

  if (m.is_integral()) {
    // x = X 2^-k with X an integer, so det(xI - M) = det(XI - 2^k M) 2^-kn.
    int e = 0;
    const double f = std::frexp(x, &e);
    const auto mant = static_cast<std::int64_t>(std::ldexp(f, 53));
    long k = 0;
    cpp_int big_x = mant;
    if (e - 53 >= 0) {
      big_x <<= (e - 53);
    } else {
      k = 53 - e;
    }
    std::vector<cpp_int> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cpp_int entry = -static_cast<std::int64_t>(m(i, j));
        entry <<= k;
        if (i == j) entry += big_x;
        a[static_cast<std::size_t>(i) * n + j] = std::move(entry);
      }
    }
    return scaled_to_double(bareiss(std::move(a), n), k * n);
  }

  std::vector<long double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = (i == j ? static_cast<long double>(x) : 0.0L) - m(i, j);
  return static_cast<double>(bareiss(std::move(a), n));
}

double rayleigh(const SymmetricMatrix& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.order()) throw std::invalid_argument("rayleigh: length mismatch");
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < m.order(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.order(); ++j) row += m(i, j) * x[j];
    num += x[i] * row;
    den += x[i] * x[i];
  }
  if (den == 0.0) throw std::invalid_argument("rayleigh: zero vector");
  return num / den;
}

}  // namespace balpha
