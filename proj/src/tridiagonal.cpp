#include "hoquant/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hoquant {

namespace {

// LU with partial pivoting of (T - shift I), kept in the LAPACK gttrf layout
// (multipliers in dl, upper bands in d, du, du2).
struct TridiagonalLU {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swapped;

  TridiagonalLU(const SymmetricTridiagonal& t, double shift) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    dl = t.off;
    du = t.off;
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, false);

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
    for (double e : t.off) scale = std::max(scale, std::abs(e));
    const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();

    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = true;
      }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    if (n > 2)
      for (std::size_t i = n - 2; i-- > 0;)
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

std::vector<double> SymmetricTridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += off[i - 1] * x[i - 1];
    if (i + 1 < n) s += off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

std::size_t count_below(const SymmetricTridiagonal& t, double x) {
  const std::size_t n = t.size();
  const double guard = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1] / q;
    q = t.diag[i] - x - coupling;
    if (q == 0.0) q = -guard;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k > n) throw std::invalid_argument("requested more eigenvalues than the matrix order");
  if (t.off.size() + 1 != n && n > 0)
    throw std::invalid_argument("tridiagonal off-diagonal has the wrong length");

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }

  std::vector<double> values(k);
  for (std::size_t j = 0; j < k; ++j) {
    double a = j == 0 ? lo : values[j - 1];
    double b = hi;
    // invariant: count_below(a) <= j < count_below(b)
    while (b - a > 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)) &&
           b - a > std::numeric_limits<double>::min()) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (count_below(t, mid) > j)
        b = mid;
      else
        a = mid;
    }
    values[j] = 0.5 * (a + b);
  }
  return values;
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      const std::vector<std::vector<double>>& previous,
                                      double tolerance) {
  const std::size_t n = t.size();
  const TridiagonalLU lu(t, eigenvalue);

  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);

  double matrix_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) matrix_scale = std::max(matrix_scale, std::abs(t.diag[i]));
  for (double e : t.off) matrix_scale = std::max(matrix_scale, std::abs(e));

  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 8; ++iter) {
    for (const auto& p : previous) {
      const double c = std::inner_product(v.begin(), v.end(), p.begin(), 0.0);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * p[i];
    }
    lu.solve(v);
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv)) break;
    for (double& x : v) x /= nv;

    const std::vector<double> tv = t.apply(v);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += (tv[i] - eigenvalue * v[i]) * (tv[i] - eigenvalue * v[i]);
    residual = std::sqrt(r2) / std::max(matrix_scale, 1.0);
    if (iter >= 1 && residual <= tolerance) return v;
  }
  throw std::runtime_error("inverse iteration did not converge (relative residual " +
                           std::to_string(residual) + ")");
}

}  // namespace hoquant
