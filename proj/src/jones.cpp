#include "qvcz/jones.hpp"

#include <cmath>

#include "qvcz/errors.hpp"

namespace qvcz {

namespace {

double cot_checked(const InterfaceAngles& a) {
  const double s = std::sin(a.theta);
  const double c = std::cos(a.theta);
  if (!(s > 0.0) || !(c > 0.0)) {
    throw DomainError("theta: Jones matrices need theta strictly in (0, pi/2)");
  }
  return c / s;
}

}  // namespace

JonesMatrix jones_reflected_at(const FresnelSet& f, const InterfaceAngles& a,
                               Complex kx, Complex ky) {
  const double cot = cot_checked(a);
  const double off = (f.r_p + f.r_s) * cot;
  JonesMatrix j;
  j.kind = Frame::reflected;
  j.e[0][0] = f.r_p + f.dr_p * kx;
  j.e[0][1] = off * ky;
  j.e[1][0] = -off * ky;
  j.e[1][1] = f.r_s + f.dr_s * kx;
  return j;
}

JonesMatrix jones_transmitted_at(const FresnelSet& f, const InterfaceAngles& a,
                                 Complex kx, Complex ky) {
  const double cot = cot_checked(a);
  JonesMatrix j;
  j.kind = Frame::transmitted;
  j.e[0][0] = f.t_p + a.eta * f.dt_p * kx;
  j.e[0][1] = (f.t_p - a.eta * f.t_s) * cot * ky;
  j.e[1][0] = (a.eta * f.t_p - f.t_s) * cot * ky;
  j.e[1][1] = f.t_s + a.eta * f.dt_s * kx;
  return j;
}

JonesMatrix jones_reflected(const FresnelSet& f, const InterfaceAngles& a,
                            const TransverseMomenta& k) {
  return jones_reflected_at(f, a, Complex(k.kx_over_k), Complex(k.ky_over_k));
}

JonesMatrix jones_transmitted(const FresnelSet& f, const InterfaceAngles& a,
                              const TransverseMomenta& k) {
  return jones_transmitted_at(f, a, Complex(k.kx_over_k), Complex(k.ky_over_k));
}

Matrix2c polarization_transfer(const JonesMatrix& j) {
  Matrix2c out{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Complex acc = 0.0;
      for (int g = 0; g < 2; ++g) {
        acc += std::conj(j.e[g][a]) * j.e[g][b];
      }
      out[a][b] = acc;
    }
  }
  return out;
}

}  // namespace qvcz
