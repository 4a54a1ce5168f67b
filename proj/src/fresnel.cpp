#include "qvcz/fresnel.hpp"

#include <cmath>
#include <numbers>

#include "qvcz/errors.hpp"

namespace qvcz {

InterfaceAngles snell(double theta, double n) {
  if (!(theta > 0.0) || !(theta < std::numbers::pi / 2.0) ||
      !std::isfinite(theta)) {
    throw DomainError("theta: incidence angle must lie strictly in (0, pi/2)");
  }
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw DomainError("n: refractive index must be >= 1 (external incidence)");
  }
  InterfaceAngles a;
  a.theta = theta;
  a.n = n;
  a.theta_t = std::asin(std::sin(theta) / n);
  a.eta = std::cos(a.theta_t) / std::cos(theta);
  return a;
}

FresnelSet fresnel_coefficients(const InterfaceAngles& a) {
  const double ct = std::cos(a.theta);
  const double ctt = std::cos(a.theta_t);
  FresnelSet f;
  f.r_p = (a.n * ct - ctt) / (a.n * ct + ctt);
  f.r_s = (ct - a.n * ctt) / (ct + a.n * ctt);
  f.t_p = 2.0 * ct / (a.n * ct + ctt);
  f.t_s = 2.0 * ct / (ct + a.n * ctt);
  return f;
}

FresnelSet fresnel_derivatives(const InterfaceAngles& a) {
  FresnelSet f = fresnel_coefficients(a);

  const double st = std::sin(a.theta);
  const double ct = std::cos(a.theta);
  const double stt = std::sin(a.theta_t);
  const double ctt = std::cos(a.theta_t);
  const double dtt = ct / (a.n * ctt);  // d theta_t / d theta

  // r_p = (A-B)/(A+B), t_p = 2C/(A+B); r_s = (C-D)/(C+D), t_s = 2C/(C+D)
  const double A = a.n * ct, dA = -a.n * st;
  const double B = ctt, dB = -stt * dtt;
  const double C = ct, dC = -st;
  const double D = a.n * ctt, dD = -a.n * stt * dtt;

  const double pden = (A + B) * (A + B);
  const double sden = (C + D) * (C + D);
  f.dr_p = 2.0 * (dA * B - A * dB) / pden;
  f.dr_s = 2.0 * (dC * D - C * dD) / sden;
  f.dt_p = 2.0 * (dC * (A + B) - C * (dA + dB)) / pden;
  f.dt_s = 2.0 * (dC * (C + D) - C * (dC + dD)) / sden;
  return f;
}

double brewster_angle(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw DomainError("n: refractive index must be >= 1");
  }
  return std::atan(n);
}

}  // namespace qvcz
