#pragma once

#include <functional>

namespace qvcz {

/// Gaussian beam parameters in millimeters.  delta_s (shift area, mm²) and
/// delta_if (Imbert–Fedorov moment, mm) quantify beam aberration; both are
/// zero for the fundamental Gaussian and are carried here as opaque
/// user-supplied inputs.
struct BeamParams {
  double w0 = 0.0;      ///< waist radius, mm
  double lambda = 0.0;  ///< wavelength, mm
  double k0 = 0.0;      ///< 2*pi/lambda, 1/mm
  double delta_s = 0.0;
  double delta_if = 0.0;

  static BeamParams make(double w0, double lambda, double delta_s = 0.0,
                         double delta_if = 0.0);
};

/// Transverse intensity profile 2/(pi w0²) exp(−(x²+y²)/w0²).
double gaussian_intensity(double x, double y, const BeamParams& beam);

/// Angular spectrum (2 w0²/pi) exp(−(w0²/2)(kx²+ky²)).
double gaussian_angular_spectrum(double kx, double ky, const BeamParams& beam);

/// Centroid Δ_Y and shift area Δ_S of an intensity profile:
///   Δ_Y = ∫∫ y I dx dy / ∫∫ I dx dy,   Δ_S = ∫∫ x y I dx dy / ∫∫ I dx dy.
struct IntensityMoments {
  double delta_y = 0.0;
  double delta_s = 0.0;
};

/// Tensor-product Gauss–Hermite evaluation plan for the moment integrals.
/// scale is the Gaussian length scale of the profile; for profiles of the
/// form polynomial × exp(−(x²+y²)/scale²) (or sharper) the node count
/// default is exact to machine precision.
struct QuadratureSpec {
  int nodes = 32;
  double scale = 1.0;
};

/// Throws NonConvergenceError if the denominator integral is below 1e-15.
IntensityMoments intensity_moments(
    const std::function<double(double, double)>& profile,
    const QuadratureSpec& spec);

}  // namespace qvcz
