#pragma once

namespace qvcz {

/// Incidence/refraction geometry at a planar dielectric interface.
/// The incidence side is vacuum, the transmission side has relative
/// index n >= 1; total internal reflection is outside the domain.
struct InterfaceAngles {
  double theta;    ///< incidence angle, rad, strictly inside (0, pi/2)
  double theta_t;  ///< refraction angle, rad
  double n;        ///< relative refractive index
  double eta;      ///< obliquity factor cos(theta_t)/cos(theta)
};

/// Amplitude reflection/transmission coefficients and their derivatives
/// with respect to the incidence angle.  Derivative fields are populated
/// by fresnel_derivatives and left at zero by fresnel_coefficients.
///
/// Convention: r_p = (n cos θ − cos θ_t)/(n cos θ + cos θ_t),
///             r_s = (cos θ − n cos θ_t)/(cos θ + n cos θ_t),
///             t_p = 2 cos θ/(n cos θ + cos θ_t),
///             t_s = 2 cos θ/(cos θ + n cos θ_t).
/// This is the unique standard choice with r_p(0) + r_s(0) = 0, which keeps
/// the cot θ polarization couplings finite at normal incidence.
struct FresnelSet {
  double r_p = 0.0;
  double r_s = 0.0;
  double t_p = 0.0;
  double t_s = 0.0;
  double dr_p = 0.0;
  double dr_s = 0.0;
  double dt_p = 0.0;
  double dt_s = 0.0;
};

/// Snell's law for external incidence.  Throws DomainError unless
/// 0 < theta < pi/2 and n >= 1.
InterfaceAngles snell(double theta, double n);

/// Amplitude coefficients at one angle (derivative fields left at zero).
FresnelSet fresnel_coefficients(const InterfaceAngles& angles);

/// Amplitude coefficients plus analytic angular derivatives, using
/// d theta_t/d theta = cos theta / (n cos theta_t).
FresnelSet fresnel_derivatives(const InterfaceAngles& angles);

/// arctan(n); r_p vanishes there.
double brewster_angle(double n);

}  // namespace qvcz
