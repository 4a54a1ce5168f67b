#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qvcz/errors.hpp"
#include "qvcz/geometry.hpp"

using namespace qvcz;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
}

TEST_CASE("reflected frame examples") {
  // dx = 0 reduces the x ratio to tan(theta)
  const FrameRatios a = reflected_frame({0.0, 0.0, 1.0}, 45.0 * kDeg);
  CHECK(a.x_over_z == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.z == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

  const FrameRatios b = reflected_frame({0.5, 0.0, 1.0}, 60.0 * kDeg);
  CHECK(b.z == doctest::Approx(0.933012701892).epsilon(1e-11));
  CHECK(b.x_over_z == doctest::Approx(0.660254037844).epsilon(1e-11));

  // dy = 0 keeps the y ratio at zero for every angle
  for (double deg = 5.0; deg < 90.0; deg += 10.0) {
    CHECK(reflected_frame({0.3, 0.0, 1.0}, deg * kDeg).y_over_z == 0.0);
  }
}

TEST_CASE("transmitted frame examples") {
  const FrameRatios a = transmitted_frame({0.0, 0.0, 1.0}, 30.0 * kDeg);
  CHECK(a.x_over_z == doctest::Approx(std::tan(30.0 * kDeg)).epsilon(1e-14));

  // theta = 60 deg, n = 1.5 -> theta_t = 35.2644 deg
  const double theta_t = 0.61547970867038734;
  const FrameRatios b = transmitted_frame({0.5, 0.0, 1.0}, theta_t);
  CHECK(b.z == doctest::Approx(1.10517171552).epsilon(1e-11));
  CHECK(b.x_over_z == doctest::Approx(0.153009687409).epsilon(1e-10));
  CHECK(b.frame == Frame::transmitted);
}

TEST_CASE("scale invariance") {
  const DetectorGeometry g{0.4, 0.7, 1.3};
  for (double c : {0.5, 2.0, 10.0}) {
    const DetectorGeometry gs{c * g.dx, c * g.dy, c * g.dz};
    for (double deg : {10.0, 45.0, 80.0}) {
      const FrameRatios r1 = reflected_frame(g, deg * kDeg);
      const FrameRatios r2 = reflected_frame(gs, deg * kDeg);
      CHECK(r2.x_over_z == doctest::Approx(r1.x_over_z).epsilon(1e-13));
      CHECK(r2.y_over_z == doctest::Approx(r1.y_over_z).epsilon(1e-13));
      CHECK(r2.z == doctest::Approx(c * r1.z).epsilon(1e-13));
    }
  }
}

TEST_CASE("dy enters only y_over_z and linearly") {
  const DetectorGeometry g{0.4, 0.7, 1.3};
  DetectorGeometry g3 = g;
  g3.dy = 3.0 * g.dy;
  const FrameRatios r1 = reflected_frame(g, 25.0 * kDeg);
  const FrameRatios r3 = reflected_frame(g3, 25.0 * kDeg);
  CHECK(r3.x_over_z == r1.x_over_z);
  CHECK(r3.z == r1.z);
  CHECK(r3.y_over_z == doctest::Approx(3.0 * r1.y_over_z).epsilon(1e-15));
}

TEST_CASE("continuity in theta") {
  const DetectorGeometry g{0.5, 0.5, 1.0};
  double prev = reflected_frame(g, 1.0 * kDeg).x_over_z;
  for (double deg = 1.01; deg <= 89.0; deg += 0.01) {
    const double cur = reflected_frame(g, deg * kDeg).x_over_z;
    CHECK(std::abs(cur - prev) < 0.01);
    prev = cur;
  }
}

TEST_CASE("degenerate frame error") {
  CHECK_THROWS_AS(reflected_frame({-2.0, 0.0, 1.0}, 60.0 * kDeg),
                  DegenerateFrameError);
  CHECK_THROWS_AS(reflected_frame({0.0, 0.0, 0.0}, 30.0 * kDeg), DomainError);
  CHECK_THROWS_AS(reflected_frame({0.0, 0.0, -1.0}, 30.0 * kDeg), DomainError);
}
