#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hoquant {

using complex = std::complex<double>;

/// Uniform grid on [-b, b] with an odd number of points, so that the middle
/// sample sits exactly at the origin and composite Simpson applies.
class Grid {
 public:
  Grid(double half_width, std::size_t n_points);

  double half_width() const { return half_width_; }
  std::size_t size() const { return n_points_; }
  double spacing() const { return spacing_; }
  std::size_t center() const { return (n_points_ - 1) / 2; }

  double point(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(center())) * spacing_;
  }
  std::vector<double> points() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double half_width_;
  std::size_t n_points_;
  double spacing_;
};

Grid make_grid(double half_width, std::size_t n_points);

/// Complex samples of a function on a Grid. Samples are always finite.
class GridFunction {
 public:
  explicit GridFunction(Grid grid);
  GridFunction(Grid grid, std::vector<complex> samples);

  template <class F>
  static GridFunction sample(const Grid& grid, F&& f) {
    std::vector<complex> s(grid.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = complex(f(grid.point(i)));
    return GridFunction(grid, std::move(s));
  }

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const complex> samples() const { return samples_; }
  std::span<complex> samples() { return samples_; }

  complex operator[](std::size_t i) const { return samples_[i]; }
  complex& operator[](std::size_t i) { return samples_[i]; }

  std::vector<double> real_part() const;
  double max_abs() const;
  bool is_finite() const;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(complex s);

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(GridFunction a, complex s) { return a *= s; }
  friend GridFunction operator*(complex s, GridFunction a) { return a *= s; }

 private:
  Grid grid_;
  std::vector<complex> samples_;
};

/// Pointwise product f(x) * g(x); both must live on the same grid.
GridFunction multiply(const GridFunction& f, const GridFunction& g);

/// Pointwise weight(x) * f(x).
template <class W>
GridFunction weighted(const GridFunction& f, W&& weight) {
  GridFunction out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= weight(f.grid().point(i));
  return out;
}

/// Composite Simpson weights (h/3 * {1, 4, 2, ..., 4, 1}).
std::vector<double> simpson_weights(const Grid& grid);

/// Composite Simpson over raw samples with spacing h. values.size() must be odd.
double simpson(std::span<const double> values, double h);
complex simpson(std::span<const complex> values, double h);

/// Composite Simpson approximation of the integral over [-b, b].
complex integrate(const GridFunction& f);

/// Integral of |f|^2.
double norm_squared(const GridFunction& f);

/// Real part of the L2 inner product, Re \int f conj(g).
double inner_real(const GridFunction& f, const GridFunction& g);

/// Fourth-order finite-difference derivative; one-sided five-point stencils
/// at the two outermost points on each side. Needs at least 5 points.
GridFunction differentiate(const GridFunction& f);

/// Throws std::invalid_argument unless both functions share a grid.
void require_same_grid(const GridFunction& f, const GridFunction& g, const char* what);

}  // namespace hoquant
