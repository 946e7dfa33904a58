#pragma once

// Closed forms and adaptive quadrature used as references in the tests.
// Nothing here calls into the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

/// Physicists' Hermite polynomial by explicit formula (n <= 5).
inline double hermite_poly(unsigned n, double x) {
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0 * x;
    case 2: return 4.0 * x * x - 2.0;
    case 3: return 8.0 * x * x * x - 12.0 * x;
    case 4: return 16.0 * std::pow(x, 4) - 48.0 * x * x + 12.0;
    case 5: return 32.0 * std::pow(x, 5) - 160.0 * std::pow(x, 3) + 120.0 * x;
  }
  return std::nan("");
}

/// Normalized hermite function at scale a, n <= 5.
inline double hermite_fn(unsigned n, double a, double x) {
  double fact = 1.0;
  for (unsigned k = 2; k <= n; ++k) fact *= k;
  const double norm = std::sqrt(a / (std::sqrt(std::numbers::pi) * std::ldexp(1.0, static_cast<int>(n)) * fact));
  return norm * hermite_poly(n, a * x) * std::exp(-0.5 * a * a * x * x);
}

/// Derivative of hermite_fn(0, a, x) and hermite_fn(1, a, x).
inline double psi0_prime(double a, double x) { return -a * a * x * hermite_fn(0, a, x); }
inline double psi1_prime(double a, double x) {
  return std::sqrt(2.0) * a * (1.0 - a * a * x * x) * hermite_fn(0, a, x);
}

template <class F>
double integrate(F f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 20, 1e-14);
}

template <class F>
double integrate_smooth(F f, double lo, double hi) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, lo, hi);
}

}  // namespace oracle
