#include "qvcz/moments.hpp"

#include <cmath>
#include <numbers>

#include "qvcz/errors.hpp"
#include "qvcz/quadrature.hpp"

namespace qvcz {

BeamParams BeamParams::make(double w0, double lambda, double delta_s,
                            double delta_if) {
  if (!(w0 > 0.0) || !(lambda > 0.0) || !std::isfinite(w0) ||
      !std::isfinite(lambda)) {
    throw DomainError("beam: w0 and lambda must be positive and finite");
  }
  BeamParams b;
  b.w0 = w0;
  b.lambda = lambda;
  b.k0 = 2.0 * std::numbers::pi / lambda;
  b.delta_s = delta_s;
  b.delta_if = delta_if;
  return b;
}

double gaussian_intensity(double x, double y, const BeamParams& beam) {
  const double w2 = beam.w0 * beam.w0;
  return 2.0 / (std::numbers::pi * w2) * std::exp(-(x * x + y * y) / w2);
}

double gaussian_angular_spectrum(double kx, double ky, const BeamParams& beam) {
  const double w2 = beam.w0 * beam.w0;
  return 2.0 * w2 / std::numbers::pi *
         std::exp(-w2 / 2.0 * (kx * kx + ky * ky));
}

IntensityMoments intensity_moments(
    const std::function<double(double, double)>& profile,
    const QuadratureSpec& spec) {
  if (!(spec.scale > 0.0) || spec.nodes < 2) {
    throw DomainError("quadrature: scale must be > 0 and nodes >= 2");
  }
  const GaussHermite& gh = GaussHermite::rule(spec.nodes);
  const double s = spec.scale;

  // Total weights w_i exp(x_i^2) recover the plain integral; exact for
  // profiles of the form polynomial times exp(-(x^2+y^2)/scale^2).
  std::vector<double> node(gh.x.size()), weight(gh.x.size());
  for (std::size_t i = 0; i < gh.x.size(); ++i) {
    node[i] = s * gh.x[i];
    weight[i] = s * gh.w[i] * std::exp(gh.x[i] * gh.x[i]);
  }

  double i00 = 0.0, iy = 0.0, ixy = 0.0;
  for (std::size_t i = 0; i < node.size(); ++i) {
    for (std::size_t j = 0; j < node.size(); ++j) {
      const double x = node[i];
      const double y = node[j];
      const double f = weight[i] * weight[j] * profile(x, y);
      i00 += f;
      iy += y * f;
      ixy += x * y * f;
    }
  }
  if (std::abs(i00) < 1e-15) {
    throw NonConvergenceError(
        "moments: denominator integral below 1e-15; profile not resolved");
  }
  return IntensityMoments{iy / i00, ixy / i00};
}

}  // namespace qvcz
