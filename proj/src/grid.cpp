#include "hoquant/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hoquant {

Grid::Grid(double half_width, std::size_t n_points)
    : half_width_(half_width), n_points_(n_points), spacing_(0.0) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("grid half-width must be positive and finite");
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("grid needs an odd number of points >= 3, got " +
                                std::to_string(n_points));
  spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> x(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) x[i] = point(i);
  return x;
}

Grid make_grid(double half_width, std::size_t n_points) { return Grid(half_width, n_points); }

GridFunction::GridFunction(Grid grid) : grid_(grid), samples_(grid.size()) {}

GridFunction::GridFunction(Grid grid, std::vector<complex> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw std::invalid_argument("sample count does not match grid size");
  if (!is_finite()) throw std::invalid_argument("grid function has non-finite samples");
}

std::vector<double> GridFunction::real_part() const {
  std::vector<double> r(samples_.size());
  std::transform(samples_.begin(), samples_.end(), r.begin(),
                 [](complex z) { return z.real(); });
  return r;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (complex z : samples_) m = std::max(m, std::abs(z));
  return m;
}

bool GridFunction::is_finite() const {
  return std::all_of(samples_.begin(), samples_.end(), [](complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(*this, other, "addition");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(*this, other, "subtraction");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(complex s) {
  for (complex& z : samples_) z *= s;
  return *this;
}

GridFunction multiply(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "multiply");
  GridFunction out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= g[i];
  return out;
}

void require_same_grid(const GridFunction& f, const GridFunction& g, const char* what) {
  if (!(f.grid() == g.grid()))
    throw std::invalid_argument(std::string("grid mismatch in ") + what);
}

std::vector<double> simpson_weights(const Grid& grid) {
  const std::size_t n = grid.size();
  const double h3 = grid.spacing() / 3.0;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = (i % 2 == 1) ? 4.0 * h3 : 2.0 * h3;
  w.front() = h3;
  w.back() = h3;
  return w;
}

namespace {

template <class T>
T simpson_impl(std::span<const T> v, double h) {
  const std::size_t n = v.size();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson needs an odd sample count >= 3");
  T odd{}, even{};
  for (std::size_t i = 1; i + 1 < n; i += 2) odd += v[i];
  for (std::size_t i = 2; i + 1 < n; i += 2) even += v[i];
  return (v.front() + v.back() + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

}  // namespace

double simpson(std::span<const double> values, double h) { return simpson_impl(values, h); }
complex simpson(std::span<const complex> values, double h) { return simpson_impl(values, h); }

complex integrate(const GridFunction& f) { return simpson(f.samples(), f.grid().spacing()); }

double norm_squared(const GridFunction& f) {
  std::vector<double> a(f.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::norm(f[i]);
  return simpson(a, f.grid().spacing());
}

double inner_real(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "inner product");
  std::vector<double> a(f.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (f[i] * std::conj(g[i])).real();
  return simpson(a, f.grid().spacing());
}

GridFunction differentiate(const GridFunction& f) {
  const std::size_t n = f.size();
  if (n < 5) throw std::invalid_argument("differentiate needs at least 5 grid points");
  const double inv = 1.0 / (12.0 * f.grid().spacing());
  auto s = f.samples();
  std::vector<complex> d(n);
  d[0] = (-25.0 * s[0] + 48.0 * s[1] - 36.0 * s[2] + 16.0 * s[3] - 3.0 * s[4]) * inv;
  d[1] = (-3.0 * s[0] - 10.0 * s[1] + 18.0 * s[2] - 6.0 * s[3] + s[4]) * inv;
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (s[i - 2] - 8.0 * s[i - 1] + 8.0 * s[i + 1] - s[i + 2]) * inv;
  d[n - 2] = (3.0 * s[n - 1] + 10.0 * s[n - 2] - 18.0 * s[n - 3] + 6.0 * s[n - 4] - s[n - 5]) * inv;
  d[n - 1] =
      (25.0 * s[n - 1] - 48.0 * s[n - 2] + 36.0 * s[n - 3] - 16.0 * s[n - 4] + 3.0 * s[n - 5]) * inv;
  return GridFunction(f.grid(), std::move(d));
}

}  // namespace hoquant
