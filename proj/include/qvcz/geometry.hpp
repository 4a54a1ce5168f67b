#pragma once

namespace qvcz {

enum class Frame { reflected, transmitted };

/// Lab-frame detector arrangement on the observation screen.
/// dx: vertical detector offset, dy: horizontal detector separation,
/// dz: screen distance.  All three share one unit (millimeters).
struct DetectorGeometry {
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
};

/// Detector offsets re-expressed in a secondary-beam frame, already
/// divided by the frame propagation distance z.
struct FrameRatios {
  double x_over_z = 0.0;
  double y_over_z = 0.0;
  double z = 0.0;
  Frame frame = Frame::reflected;
};

/// Reflected-beam frame quantities for incidence angle theta (rad):
///   z        = dx sin θ + dz cos θ
///   x_over_z = [(dx tan θ + dz) sin θ − dx / cos θ] / z
///   y_over_z = dy / z
/// Throws DegenerateFrameError when z <= 0.
FrameRatios reflected_frame(const DetectorGeometry& g, double theta);

/// Same map with the refraction angle theta_t substituted.
FrameRatios transmitted_frame(const DetectorGeometry& g, double theta_t);

}  // namespace qvcz
