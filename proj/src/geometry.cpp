#include "qvcz/geometry.hpp"

#include <cmath>

#include "qvcz/errors.hpp"

namespace qvcz {

namespace {

FrameRatios beam_frame(const DetectorGeometry& g, double angle, Frame which) {
  if (!std::isfinite(g.dx) || !std::isfinite(g.dy) || !(g.dz > 0.0)) {
    throw DomainError("geometry: dx, dy must be finite and dz > 0");
  }
  const double s = std::sin(angle);
  const double c = std::cos(angle);
  const double z = g.dx * s + g.dz * c;
  if (!(z > 0.0)) {
    throw DegenerateFrameError(
        "geometry: frame denominator dx sin + dz cos is non-positive");
  }
  FrameRatios r;
  r.frame = which;
  r.z = z;
  r.x_over_z = ((g.dx * std::tan(angle) + g.dz) * s - g.dx / c) / z;
  r.y_over_z = g.dy / z;
  return r;
}

}  // namespace

FrameRatios reflected_frame(const DetectorGeometry& g, double theta) {
  return beam_frame(g, theta, Frame::reflected);
}

FrameRatios transmitted_frame(const DetectorGeometry& g, double theta_t) {
  return beam_frame(g, theta_t, Frame::transmitted);
}

}  // namespace qvcz
