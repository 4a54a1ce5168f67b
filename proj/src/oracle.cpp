#include "qvcz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qvcz/errors.hpp"
#include "qvcz/quadrature.hpp"

namespace qvcz {

namespace {

// Matrix product with plain transpose on the left factor.  For real
// coefficient matrices at real momenta this equals J† J; at the complex
// shifted nodes it is the analytic continuation of that product.
Matrix2c transpose_product(const Matrix2c& l, const Matrix2c& r) {
  Matrix2c out{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out[a][b] = l[0][a] * r[0][b] + l[1][a] * r[1][b];
    }
  }
  return out;
}

}  // namespace

std::complex<double> component(const FourPointCorrelation& fp,
                               ComponentLabel label) {
  switch (label) {
    case ComponentLabel::HVHV: return fp.tensor[0][1][0][1];
    case ComponentLabel::VVHH: return fp.tensor[1][1][0][0];
    case ComponentLabel::VVVV: return fp.tensor[1][1][1][1];
    case ComponentLabel::HHVH: return fp.tensor[0][0][1][0];
  }
  return {};
}

Oracle::Oracle(const BeamParams& beam, const FresnelSet& fres,
               const InterfaceAngles& angles, const DetectorGeometry& geom,
               int nodes)
    : beam_(beam), fres_(fres), angles_(angles), geom_(geom), nodes_(nodes) {
  if (beam.w0 * beam.k0 < 3.0) {
    throw QuadratureValidityError(
        "oracle: w0*k0 < 3, outside the paraxial validity band");
  }
  if (nodes < 8) {
    throw QuadratureValidityError(
        "oracle: at least 8 nodes per axis required for exactness");
  }
  fr_ = reflected_frame(geom, angles.theta);
  ft_ = transmitted_frame(geom, angles.theta_t);
}

// Momentum integral of the Gaussian angular spectrum times the transfer
// polynomial times the far-field phase exp(i w0^2 k0^2 kappa.sigma).
// Substituting kappa = nu + i sigma absorbs the phase into the Gaussian
// envelope exp(-(w0^2 k0^2 / 2)|sigma|^2); the remaining integrand is the
// transfer polynomial at shifted nodes under the pure Gauss-Hermite weight.
Matrix2c Oracle::transfer_ft(Frame frame, double sigma_x,
                             double sigma_y) const {
  const double a = 0.5 * beam_.w0 * beam_.w0 * beam_.k0 * beam_.k0;
  const double inv_sqrt_a = 1.0 / std::sqrt(a);
  const double env =
      std::exp(-a * (sigma_x * sigma_x + sigma_y * sigma_y));
  const GaussHermite& gh = GaussHermite::rule(nodes_);

  Matrix2c acc{};
  for (std::size_t i = 0; i < gh.x.size(); ++i) {
    const Complex kx(gh.x[i] * inv_sqrt_a, sigma_x);
    for (std::size_t j = 0; j < gh.x.size(); ++j) {
      const Complex ky(gh.x[j] * inv_sqrt_a, sigma_y);
      const JonesMatrix jm = frame == Frame::reflected
                                 ? jones_reflected_at(fres_, angles_, kx, ky)
                                 : jones_transmitted_at(fres_, angles_, kx, ky);
      const Matrix2c t = transpose_product(jm.e, jm.e);
      const double w = gh.w[i] * gh.w[j];
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          acc[p][q] += w * t[p][q];
        }
      }
    }
  }
  const double norm = env / std::numbers::pi;
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      acc[p][q] *= norm;
    }
  }
  return acc;
}

TwoPointCoherence Oracle::propagate_two_point(Frame frame) const {
  TwoPointCoherence out;
  out.frame = frame;
  out.nodes = nodes_;
  out.geom = geom_;
  if (frame == Frame::reflected) {
    out.sigma_x = fr_.x_over_z;
    out.sigma_y = fr_.y_over_z;
    out.z = fr_.z;
  } else {
    out.sigma_x = -ft_.x_over_z;
    out.sigma_y = -ft_.y_over_z;
    out.z = ft_.z;
  }
  out.m = transfer_ft(frame, out.sigma_x, out.sigma_y);
  return out;
}

double Oracle::scalar_envelope(Frame frame) const {
  const double a = 0.5 * beam_.w0 * beam_.w0 * beam_.k0 * beam_.k0;
  const FrameRatios& r = frame == Frame::reflected ? fr_ : ft_;
  const double env = std::exp(
      -a * (r.x_over_z * r.x_over_z + r.y_over_z * r.y_over_z));
  const GaussHermite& gh = GaussHermite::rule(nodes_);
  double acc = 0.0;
  for (std::size_t i = 0; i < gh.x.size(); ++i) {
    for (std::size_t j = 0; j < gh.x.size(); ++j) {
      acc += gh.w[i] * gh.w[j];
    }
  }
  return env * acc / std::numbers::pi;
}

FourPointCorrelation Oracle::assemble_four_point(
    const TwoPointCoherence& jr, const TwoPointCoherence& jt) const {
  if (jr.frame != Frame::reflected || jt.frame != Frame::transmitted) {
    throw ArgumentMismatchError(
        "assemble: expected a (reflected, transmitted) pair");
  }
  const auto same = [](double a, double b) { return a == b; };
  if (!same(jr.geom.dx, jt.geom.dx) || !same(jr.geom.dy, jt.geom.dy) ||
      !same(jr.geom.dz, jt.geom.dz) || !same(jr.geom.dx, geom_.dx) ||
      !same(jr.geom.dy, geom_.dy) || !same(jr.geom.dz, geom_.dz)) {
    throw ArgumentMismatchError(
        "assemble: detector conditions differ between the two beams");
  }
  if (jr.nodes != jt.nodes) {
    throw ArgumentMismatchError("assemble: node counts differ");
  }

  // Exchange term: the indistinguishability sum couples the shared source
  // points across the two beams at each detector separately, pinning each
  // beam's momenta at the half difference of the two frames' viewing
  // ratios of one detector (symmetric placement: half the separation each
  // side).  The unpolarized source carries the identity polarization
  // structure in both terms, so the exchange uses the same per-beam
  // transfers at those momenta.
  const double ex = 0.5 * (fr_.x_over_z - ft_.x_over_z);
  const double ey = 0.5 * (fr_.y_over_z - ft_.y_over_z);
  const Matrix2c er = transfer_ft(Frame::reflected, ex, ey);
  const Matrix2c et = transfer_ft(Frame::transmitted, -ex, -ey);

  FourPointCorrelation fp;
  fp.normalization = 1.0;
  for (int al = 0; al < 2; ++al) {
    for (int be = 0; be < 2; ++be) {
      for (int ap = 0; ap < 2; ++ap) {
        for (int bp = 0; bp < 2; ++bp) {
          fp.direct[al][be][ap][bp] = jr.m[al][be] * jt.m[ap][bp];
          fp.exchange[al][be][ap][bp] = er[al][be] * et[ap][bp];
          fp.tensor[al][be][ap][bp] =
              fp.direct[al][be][ap][bp] + fp.exchange[al][be][ap][bp];
        }
      }
    }
  }
  return fp;
}

ComparisonReport normalize_and_compare(
    const std::vector<double>& axis,
    const std::vector<std::array<std::complex<double>, 4>>& closed,
    const std::vector<std::array<std::complex<double>, 4>>& oracle,
    std::size_t calibration_index) {
  if (axis.size() != closed.size() || axis.size() != oracle.size() ||
      calibration_index >= axis.size()) {
    throw ArgumentMismatchError("compare: input sizes disagree");
  }
  ComparisonReport rep;
  rep.calibration_index = calibration_index;
  for (int c = 0; c < 4; ++c) {
    const std::complex<double> cl = closed[calibration_index][c];
    const std::complex<double> od = oracle[calibration_index][c];
    if (std::abs(cl) < 1e-10) {
      throw CalibrationError(
          "compare: closed-form value below 1e-10 at the calibration point");
    }
    const double den = std::norm(od);
    rep.scale[c] = den > 0.0 ? (cl.real() * od.real() + cl.imag() * od.imag()) / den
                             : 0.0;
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      ComparisonRow row;
      row.axis = axis[i];
      row.component = static_cast<ComponentLabel>(c);
      row.closed = closed[i][c];
      row.oracle_scaled = rep.scale[c] * oracle[i][c];
      const double ref = std::abs(row.closed);
      row.rel_dev = ref > 0.0 ? std::abs(row.closed - row.oracle_scaled) / ref
                              : std::abs(row.oracle_scaled);
      if (i == calibration_index) {
        row.flags = "calibration";
      } else {
        rep.max_rel_dev = std::max(rep.max_rel_dev, row.rel_dev);
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace qvcz
