#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qvcz/errors.hpp"
#include "qvcz/moments.hpp"
#include "qvcz/quadrature.hpp"

using namespace qvcz;

TEST_CASE("beam parameter construction") {
  const BeamParams b = BeamParams::make(14.0, 8.5);
  CHECK(b.k0 * b.lambda == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(b.delta_s == 0.0);
  CHECK(b.delta_if == 0.0);
  CHECK_THROWS_AS(BeamParams::make(-1.0, 8.5), DomainError);
  CHECK_THROWS_AS(BeamParams::make(14.0, 0.0), DomainError);
}

TEST_CASE("gaussian intensity values") {
  const BeamParams b = BeamParams::make(14.0, 8.5);
  CHECK(gaussian_intensity(0.0, 0.0, b) ==
        doctest::Approx(0.0032480600630999048).epsilon(1e-14));
  // 1/e contour at x^2+y^2 = w0^2
  CHECK(gaussian_intensity(14.0, 0.0, b) ==
        doctest::Approx(gaussian_intensity(0, 0, b) / std::numbers::e)
            .epsilon(1e-14));

  // the plane integral of this profile is 2, not 1: the printed prefactor
  // 2/(pi w0^2) pairs with exponent exp(-r^2/w0^2) whose mass is pi w0^2
  const GaussHermite& gh = GaussHermite::rule(32);
  double total = 0.0;
  for (std::size_t i = 0; i < gh.x.size(); ++i) {
    for (std::size_t j = 0; j < gh.x.size(); ++j) {
      const double x = b.w0 * gh.x[i];
      const double y = b.w0 * gh.x[j];
      total += b.w0 * b.w0 * gh.w[i] * gh.w[j] *
               std::exp(gh.x[i] * gh.x[i] + gh.x[j] * gh.x[j]) *
               gaussian_intensity(x, y, b);
    }
  }
  CHECK(total == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("angular spectrum values") {
  const BeamParams b = BeamParams::make(14.0, 8.5);
  CHECK(gaussian_angular_spectrum(0.0, 0.0, b) ==
        doctest::Approx(124.77748).epsilon(1e-6));
  CHECK(gaussian_angular_spectrum(0.02, -0.01, b) ==
        gaussian_angular_spectrum(-0.02, 0.01, b));
  // 1/e contour at kx^2+ky^2 = 2/w0^2
  const double k = std::sqrt(2.0) / b.w0;
  CHECK(gaussian_angular_spectrum(k, 0.0, b) ==
        doctest::Approx(gaussian_angular_spectrum(0, 0, b) / std::numbers::e)
            .epsilon(1e-12));
}

TEST_CASE("fundamental Gaussian has vanishing moments") {
  const BeamParams b = BeamParams::make(14.0, 8.5);
  const IntensityMoments m = intensity_moments(
      [&b](double x, double y) { return gaussian_intensity(x, y, b); },
      QuadratureSpec{32, b.w0});
  CHECK(std::abs(m.delta_y) < 1e-12);
  CHECK(std::abs(m.delta_s) < 1e-12);
}

TEST_CASE("shifted Gaussian centroid") {
  const BeamParams b = BeamParams::make(2.0, 8.5);
  const double y0 = 0.7;
  const IntensityMoments m = intensity_moments(
      [&](double x, double y) { return gaussian_intensity(x, y - y0, b); },
      QuadratureSpec{32, b.w0});
  CHECK(m.delta_y == doctest::Approx(y0).epsilon(1e-10));
  CHECK(std::abs(m.delta_s) < 1e-10);
}

TEST_CASE("synthetic aberrated profile against a Riemann-sum oracle") {
  // profile (1 + x y / w^2) * exp(-2 (x^2+y^2)/w^2): positive near the
  // axis, with a genuine xy moment
  const double w = 3.0;
  const auto profile = [w](double x, double y) {
    return (1.0 + x * y / (w * w)) * std::exp(-2.0 * (x * x + y * y) / (w * w));
  };
  const IntensityMoments m = intensity_moments(profile, QuadratureSpec{32, w});
  CHECK(m.delta_s > 0.0);

  // brute-force fine-grid Riemann sum
  double i00 = 0.0, ixy = 0.0;
  const int n = 1200;
  const double lo = -6.0 * w, hi = 6.0 * w;
  const double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = lo + (i + 0.5) * h;
      const double y = lo + (j + 0.5) * h;
      const double p = profile(x, y) * h * h;
      i00 += p;
      ixy += x * y * p;
    }
  }
  CHECK(m.delta_s == doctest::Approx(ixy / i00).epsilon(1e-6));
  // analytic value for this profile: w^2/16
  CHECK(m.delta_s == doctest::Approx(w * w / 16.0).epsilon(1e-10));
}

TEST_CASE("even profiles have vanishing moments") {
  const auto even = [](double x, double y) {
    return (1.0 + 0.5 * x * x + 0.2 * y * y * y * y) *
           std::exp(-(x * x + y * y) / 2.25);
  };
  const IntensityMoments m = intensity_moments(even, QuadratureSpec{32, 1.5});
  CHECK(std::abs(m.delta_y) < 1e-12);
  CHECK(std::abs(m.delta_s) < 1e-12);

  const auto even_x_only = [](double x, double y) {
    return (1.0 + 0.3 * y) * std::exp(-(x * x + y * y) / 4.0);
  };
  const IntensityMoments mx =
      intensity_moments(even_x_only, QuadratureSpec{32, 2.0});
  CHECK(std::abs(mx.delta_s) < 1e-12);
}

TEST_CASE("non-convergence error on a vanishing profile") {
  CHECK_THROWS_AS(
      intensity_moments([](double, double) { return 0.0; },
                        QuadratureSpec{16, 1.0}),
      NonConvergenceError);
}

TEST_CASE("angular spectrum is the transform pair of the mode amplitude") {
  // numeric cosine transform of sqrt(I) against the spectrum, both
  // normalized at k = 0
  const BeamParams b = BeamParams::make(14.0, 8.5);
  const GaussHermite& gh = GaussHermite::rule(48);
  const double s = std::sqrt(2.0) * b.w0;
  const auto ft = [&](double k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < gh.x.size(); ++i) {
      const double x = s * gh.x[i];
      acc += s * gh.w[i] * std::exp(gh.x[i] * gh.x[i]) *
             std::sqrt(gaussian_intensity(x, 0.0, b) /
                       gaussian_intensity(0.0, 0.0, b)) *
             std::cos(k * x);
    }
    return acc;
  };
  for (double k : {0.05, 0.1, 0.15}) {
    const double lhs = ft(k) / ft(0.0);
    const double rhs = gaussian_angular_spectrum(k, 0.0, b) /
                       gaussian_angular_spectrum(0.0, 0.0, b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}
