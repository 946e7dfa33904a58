#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hoquant {

/// Real symmetric tridiagonal matrix: diag[i] on the diagonal and off[i]
/// coupling rows i and i+1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
  /// y = T x
  std::vector<double> apply(std::span<const double> x) const;
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t count_below(const SymmetricTridiagonal& t, double x);

/// The k smallest eigenvalues by Sturm bisection, ascending.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k);

/// Unit (Euclidean) eigenvector for an eigenvalue by shifted inverse iteration,
/// orthogonalized against `previous`. Throws std::runtime_error if the
/// iteration does not reach `tolerance` relative residual.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      const std::vector<std::vector<double>>& previous = {},
                                      double tolerance = 1e-10);

}  // namespace hoquant
