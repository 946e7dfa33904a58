#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hoquant/basis.hpp"
#include "hoquant/transform.hpp"
#include "oracles.hpp"

using namespace hoquant;

namespace {

complex ipow(unsigned n) {
  static const complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[n % 4];
}

}  // namespace

TEST_CASE("conjugate grid shares the point count") {
  const Grid L = conjugate_grid(Grid(10.0, 801), 2.0, 1.5);
  CHECK(L.size() == 801);
  CHECK(L.half_width() == doctest::Approx(10.0 * 2.25 / 2.0));
  CHECK_THROWS_AS(conjugate_grid(Grid(10.0, 801), 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("hermite modes map to i^n times the mode at scale omega/alpha") {
  for (auto [omega, alpha] : {std::pair{1.0, 1.0}, std::pair{1.7, 1.3}, std::pair{3.0, 0.6}}) {
    const Grid q(10.0 / alpha, 2001);
    const Grid L = conjugate_grid(q, omega, alpha);
    for (unsigned n = 0; n <= 4; ++n) {
      const GridFunction F = forward(hermite_mode(n, alpha, q), omega, L);
      double err = 0.0;
      for (std::size_t j = 0; j < L.size(); ++j) {
        const complex expected = ipow(n) * oracle::hermite_fn(n, omega / alpha, L.point(j));
        err = std::max(err, std::abs(F[j] - expected));
      }
      CHECK(err < 1e-11);
    }
  }
}

TEST_CASE("forward transform matches adaptive quadrature for a non-symmetric input") {
  const double omega = 1.3;
  auto psi = [](double q) { return (1.0 + 0.3 * q + 0.2 * q * q) * std::exp(-0.5 * (q - 0.4) * (q - 0.4)); };
  const Grid q(12.0, 3001);
  const Grid L(6.0, 61);
  const GridFunction F = forward(GridFunction::sample(q, psi), omega, L);
  const double pre = std::sqrt(omega / (2.0 * std::numbers::pi));
  for (std::size_t j = 0; j < L.size(); j += 5) {
    const double l = L.point(j);
    const double re = oracle::integrate([&](double x) { return psi(x) * std::cos(omega * x * l); }, -12.0, 12.0);
    const double im = oracle::integrate([&](double x) { return psi(x) * std::sin(omega * x * l); }, -12.0, 12.0);
    CHECK(std::abs(F[j] - pre * complex(re, im)) < 1e-11);
  }
}

TEST_CASE("inverse undoes forward and both are linear") {
  const double omega = 0.8, alpha = 1.1;
  const Grid q(10.0 / alpha, 1601);
  const Grid L = conjugate_grid(q, omega, alpha);
  const GridFunction a = GridFunction::sample(q, [](double x) { return std::exp(-0.6 * x * x) * std::cos(x); });
  const GridFunction b = hermite_mode(3, alpha, q);
  const complex s(0.3, -1.2);

  const GridFunction back = inverse(forward(a, omega, L), omega, q);
  CHECK((back - a).max_abs() < 1e-11);

  const GridFunction lhs = forward(a + b * s, omega, L);
  const GridFunction rhs = forward(a, omega, L) + forward(b, omega, L) * s;
  CHECK((lhs - rhs).max_abs() < 1e-13);
}

TEST_CASE("transforms refuse inputs that have not decayed") {
  const Grid q(5.0, 201);
  const GridFunction flat = GridFunction::sample(q, [](double x) { return std::exp(-0.5 * x * x) + 1e-3; });
  CHECK_THROWS_AS(forward(flat, 1.0, q), std::invalid_argument);
  CHECK_THROWS_AS(inverse(flat, 1.0, q), std::invalid_argument);
  CHECK_THROWS_AS(forward(hermite_mode(0, 1.0, q), 0.0, q), std::invalid_argument);
}

TEST_CASE("inverse integral at a point is the unnormalized inverse") {
  const double omega = 1.0;
  const Grid q(10.0, 2001);
  const GridFunction F = forward(hermite_mode(1, 1.0, q), omega, q);
  const double pre = std::sqrt(omega / (2.0 * std::numbers::pi));
  for (double x : {-1.3, 0.0, 0.77}) {
    CHECK(std::abs(pre * inverse_integral_at(F, omega, x) - oracle::hermite_fn(1, 1.0, x)) < 1e-11);
  }
  CHECK(std::abs(inverse_integral_at(F, omega, 10.0)) < 1e-15);
}

TEST_CASE("consistency error separates matched and mismatched pairs") {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const Grid q(10.0, 1001);
  ConjugatePair pair = mode_pair(2, p, q);
  CHECK(consistency_error(pair) < 1e-12);
  pair.F = pair.F * complex(-1.0);
  CHECK(consistency_error(pair) == doctest::Approx(2.0));
}

TEST_CASE("moments and gradient energy against closed forms") {
  const double omega = 1.9, alpha = 1.4;
  const Grid q(10.0 / alpha, 4001);
  for (unsigned n = 0; n <= 3; ++n) {
    const GridFunction m = hermite_mode(n, alpha, q);
    // <q^2> = (2n+1)/(2 alpha^2), <|d/dq|^2> = alpha^2 (2n+1)/2
    CHECK(weighted_second_moment(m, omega) ==
          doctest::Approx(omega * omega * (2.0 * n + 1.0) / (2.0 * alpha * alpha)).epsilon(1e-11));
    CHECK(gradient_energy(m) == doctest::Approx(alpha * alpha * (2.0 * n + 1.0) / 2.0).epsilon(1e-8));
  }
  const double ref = oracle::integrate(
      [&](double x) { return std::pow(oracle::psi1_prime(alpha, x), 2); }, -10.0 / alpha, 10.0 / alpha);
  CHECK(gradient_energy(hermite_mode(1, alpha, q)) == doctest::Approx(ref).epsilon(1e-8));
}

TEST_CASE("parseval residuals vanish for transform pairs at fourth order") {
  const OscillatorParams p(1.0, 1.0, 1.0);
  for (unsigned n = 0; n <= 3; ++n) {
    const auto coarse = parseval_residuals(mode_pair(n, p, Grid(10.0, 2001)));
    const auto fine = parseval_residuals(mode_pair(n, p, Grid(10.0, 4001)));
    CHECK(fine.r8 <= 1e-8);
    CHECK(fine.r9 <= 1e-8);
    CHECK(coarse.r8 / fine.r8 > 12.0);
    CHECK(coarse.r9 / fine.r9 > 12.0);
  }
  // Mismatched pair: no precondition, the residual simply reports the mismatch.
  ConjugatePair broken = mode_pair(0, p, Grid(10.0, 1001));
  broken.F = broken.F * complex(0.0);
  broken.consistency_checked = false;
  const auto r = parseval_residuals(broken);
  CHECK(r.r8 == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.r9 == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("low transformed modes: phase, parity and self-reciprocity") {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const Grid q(10.0, 4001);
  const ConjugatePair m0 = mode_pair(0, p, q);
  const ConjugatePair m1 = mode_pair(1, p, q);
  const std::size_t c = m0.F.grid().center();
  CHECK(m0.F[c].real() > 0.0);
  CHECK(std::abs(m0.F[c].imag()) < 1e-14);
  CHECK(std::abs(norm_squared(m0.F) - 1.0) < 1e-8);
  CHECK(std::abs(m1.F[c]) < 1e-14);
  double max_real = 0.0;
  for (std::size_t i = 0; i < m1.F.size(); ++i) max_real = std::max(max_real, std::abs(m1.F[i].real()));
  CHECK(max_real < 1e-12);

  // alpha = sqrt(omega): |F_n| is psi_n's shape at scale sqrt(omega)
  const double omega = 2.0;
  const OscillatorParams p2(omega, 1.0, 1.0);
  CHECK(p2.alpha() == doctest::Approx(std::sqrt(omega)));
  const Grid q2 = default_q_grid(p2.alpha());
  for (unsigned n = 0; n <= 3; ++n) {
    const ConjugatePair m = mode_pair(n, p2, q2);
    double err = 0.0;
    for (std::size_t i = 0; i < m.F.size(); ++i)
      err = std::max(err, std::abs(std::abs(m.F[i]) - std::abs(oracle::hermite_fn(n, std::sqrt(omega), m.F.grid().point(i)))));
    CHECK(err < 1e-7);
  }
}

TEST_CASE("round trips of named modes") {
  const Grid q(10.0, 4001);
  const GridFunction psi2 = hermite_mode(2, 1.0, q);
  CHECK((inverse(forward(psi2, 1.0, q), 1.0, q) - psi2).max_abs() < 1e-8);
  const GridFunction psi0 = hermite_mode(0, 1.0, q);
  CHECK((inverse(psi0, 1.0, q) - psi0).max_abs() < 1e-8);
  CHECK(parseval_residuals(mode_pair(3, OscillatorParams(1.0, 1.0, 1.0), q)).r8 <= 1e-6);
}
