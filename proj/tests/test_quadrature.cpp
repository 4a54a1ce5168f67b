#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qvcz/quadrature.hpp"

using qvcz::GaussHermite;

namespace {

// exact Gaussian moments: int x^k exp(-x^2) dx
double exact_moment(int k) {
  if (k % 2 == 1) return 0.0;
  double v = std::sqrt(std::numbers::pi);
  for (int j = 2; j <= k; j += 2) {
    v *= (j - 1) / 2.0;
  }
  return v;
}

}  // namespace

TEST_CASE("weights sum to sqrt(pi)") {
  for (int n : {8, 16, 32, 64}) {
    const GaussHermite& gh = GaussHermite::rule(n);
    double s = 0.0;
    for (double w : gh.w) s += w;
    CHECK(std::abs(s - std::sqrt(std::numbers::pi)) < 1e-14);
  }
}

TEST_CASE("polynomial moments are exact") {
  for (int n : {8, 16, 32}) {
    const GaussHermite& gh = GaussHermite::rule(n);
    for (int k = 0; k <= 2 * n - 1 && k <= 14; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < gh.x.size(); ++i) {
        s += gh.w[i] * std::pow(gh.x[i], k);
      }
      CHECK(std::abs(s - exact_moment(k)) < 1e-12 * (1.0 + exact_moment(k)));
    }
  }
}

TEST_CASE("nodes are symmetric and sorted within halves") {
  const GaussHermite& gh = GaussHermite::rule(16);
  for (int i = 0; i < 16; ++i) {
    CHECK(gh.x[static_cast<std::size_t>(i)] ==
          -gh.x[static_cast<std::size_t>(15 - i)]);
    CHECK(gh.w[static_cast<std::size_t>(i)] ==
          gh.w[static_cast<std::size_t>(15 - i)]);
  }
}

TEST_CASE("complex-shift evaluation matches a brute-force oscillatory sum") {
  // int P(x) exp(-x^2) exp(i b x) dx evaluated two ways: through the
  // complex shift x -> nu + i b/2 used by the propagation code, and by a
  // plain Riemann sum over the oscillatory integrand.
  using C = std::complex<double>;
  const auto poly = [](C x) { return 0.7 - 1.3 * x + 0.4 * x * x; };
  const GaussHermite& gh = GaussHermite::rule(16);
  for (double b : {0.3, 1.0, 2.5}) {
    C shifted = 0.0;
    for (std::size_t i = 0; i < gh.x.size(); ++i) {
      shifted += gh.w[i] * poly(C(gh.x[i], b / 2.0));
    }
    shifted *= std::exp(-b * b / 4.0);

    C brute = 0.0;
    const int n = 400000;
    const double lo = -9.0, hi = 9.0;
    const double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      const double x = lo + (i + 0.5) * h;
      brute += poly(C(x, 0.0)) * std::exp(-x * x) *
               C(std::cos(b * x), std::sin(b * x)) * h;
    }
    CHECK(std::abs(shifted - brute) < 1e-10);
  }
}

TEST_CASE("rule is deterministic") {
  const GaussHermite& a = GaussHermite::rule(24);
  const GaussHermite& b = GaussHermite::rule(24);
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    CHECK(a.x[i] == b.x[i]);
    CHECK(a.w[i] == b.w[i]);
  }
}
