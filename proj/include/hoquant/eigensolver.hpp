#pragma once

#include <vector>

#include "hoquant/basis.hpp"
#include "hoquant/grid.hpp"

namespace hoquant {

struct EigenPair {
  unsigned index = 0;
  /// Eigenvalue in the units of the equation solved (gamma for the coordinate
  /// equation, lambda2 for the momentum equation).
  double eigenvalue = 0.0;
  /// Eigenvalue of the second-order discretization on the given grid alone.
  double raw_eigenvalue = 0.0;
  /// L2-normalized, sign fixed so the outermost lobe at positive x is positive.
  GridFunction eigenfunction;
};

struct EigenOptions {
  /// Combine the h and 2h eigenvalues as (4 e_h - e_2h) / 3, cancelling the
  /// leading h^2 error of the three-point Laplacian. The 2h problem uses every
  /// other grid point.
  bool extrapolate = true;
};

/// Lowest k eigenpairs of -kinetic * f'' + potential(x) f = e f with Dirichlet
/// ends, discretized with the three-point Laplacian on the grid interior.
/// `scale` is the natural length scale used for the turning-point check.
std::vector<EigenPair> solve_sturm_liouville(const Grid& grid, double kinetic,
                                             double (*potential)(double x, double omega),
                                             double omega, unsigned k, double scale,
                                             EigenOptions options = {});

/// -beta1^2/2 psi'' + omega^2 q^2/2 psi = gamma psi. Eigenvalues in gamma units.
/// Throws std::invalid_argument if k > 20 or the grid does not contain the
/// turning points of mode k-1 plus margin.
std::vector<EigenPair> solve_eq16(const OscillatorParams& params, const Grid& grid, unsigned k,
                                  EigenOptions options = {});

/// -lambda1/2 F'' - omega^2 L^2/2 F + lambda2 F = 0 with lambda1 = -1/beta1^2,
/// solved in the equivalent form -(1/(2 beta1^2)) F'' + omega^2 L^2/2 F = lambda2 F.
std::vector<EigenPair> solve_eq17(const OscillatorParams& params, const Grid& L_grid, unsigned k,
                                  EigenOptions options = {});

/// L2 norm of -beta1^2/2 psi'' + omega^2 q^2/2 psi - gamma psi, excluding the
/// two outermost samples on each side.
double residual_eq16(const GridFunction& psi, double gamma, const OscillatorParams& params);

/// Sign changes of the real part, ignoring samples below floor * max|f|.
unsigned sign_changes(const GridFunction& f, double floor = 1e-6);

inline constexpr unsigned kMaxEigenpairs = 20;

}  // namespace hoquant
