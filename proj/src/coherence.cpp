#include "qvcz/coherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qvcz/errors.hpp"

namespace qvcz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularEps = 1e-14;
constexpr double kDegToRad = std::numbers::pi / 180.0;

void require_nonsingular(double coef, const char* name) {
  if (std::abs(coef) < kSingularEps) {
    throw SingularCoefficientError(std::string("coefficient ") + name +
                                   " below 1e-14 in a denominator");
  }
}

bool offaxial(const FrameRatios& fr, const FrameRatios& ft) {
  const auto big = [](double v) { return std::abs(v) > 0.2; };
  return big(fr.x_over_z) || big(fr.y_over_z) || big(ft.x_over_z) ||
         big(ft.y_over_z);
}

// Second additive term of the off-diagonal components, driven by the
// aberration moments; vanishes identically for the fundamental Gaussian.
std::complex<double> aberration_term(double t_factor, const FresnelSet& f,
                                     const InterfaceAngles& a, double cot,
                                     const BeamParams& b) {
  if (b.delta_s == 0.0 && b.delta_if == 0.0) {
    return {0.0, 0.0};
  }
  require_nonsingular(f.r_p, "r_p");
  require_nonsingular(f.r_s, "r_s");
  require_nonsingular(f.t_p, "t_p");
  require_nonsingular(f.t_s, "t_s");
  const std::complex<double> i(0.0, 1.0);
  const double w02 = b.w0 * b.w0;
  const std::complex<double> rfac =
      (f.dr_p + f.dr_s) * b.delta_s -
      i * b.k0 * (f.r_p + f.r_s) * w02 * b.delta_if;
  const std::complex<double> tfac =
      (f.dt_p + f.dt_s) * a.eta * b.delta_s +
      i * b.k0 * (f.t_p + f.t_s) * w02 * b.delta_if;
  const double lam4 = std::pow(b.lambda, 4);
  return lam4 * cot * cot * (f.r_p + f.r_s) * t_factor * rfac * tfac /
         (4.0 * kPi * kPi * w02 * w02 * f.r_p * f.r_s * f.t_p * f.t_s);
}

}  // namespace

const char* to_string(ComponentLabel c) {
  switch (c) {
    case ComponentLabel::HVHV: return "HVHV";
    case ComponentLabel::VVHH: return "VVHH";
    case ComponentLabel::VVVV: return "VVVV";
    case ComponentLabel::HHVH: return "HHVH";
  }
  return "?";
}

std::optional<ComponentLabel> parse_component(std::string_view s) {
  for (ComponentLabel c : kAllComponents) {
    if (s == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

double envelope(const BeamParams& beam, const FrameRatios& fr,
                const FrameRatios& ft) {
  const double wk = beam.w0 * beam.k0;
  const double sum = fr.x_over_z * fr.x_over_z + fr.y_over_z * fr.y_over_z +
                     ft.x_over_z * ft.x_over_z + ft.y_over_z * ft.y_over_z;
  return std::exp(-0.5 * wk * wk * sum);
}

double hhvh_reflected_numerator(const FresnelSet& f, const InterfaceAngles& a,
                                const FrameRatios& fr) {
  const double cot = std::cos(a.theta) / std::sin(a.theta);
  const double d = fr.x_over_z * f.dr_p + kPi * f.r_p;
  const double o = cot * fr.y_over_z * kPi * (f.r_p + f.r_s);
  return d * d - o * o;
}

HhCoherence reflected_hh_coherence(const FresnelSet& f,
                                   const InterfaceAngles& a,
                                   const FrameRatios& fr) {
  HhCoherence h;
  h.numerator = hhvh_reflected_numerator(f, a, fr);
  h.singular = std::abs(f.r_p) < kSingularEps;
  h.value = h.singular
                ? std::numeric_limits<double>::quiet_NaN()
                : h.numerator / (2.0 * kPi * kPi * f.r_p * f.r_p);
  return h;
}

CorrelationResult g2_component(ComponentLabel label, const FresnelSet& f,
                               const InterfaceAngles& a,
                               const DetectorGeometry& geom,
                               const BeamParams& beam) {
  const FrameRatios fr = reflected_frame(geom, a.theta);
  const FrameRatios ft = transmitted_frame(geom, a.theta_t);
  const double env = envelope(beam, fr, ft);
  const double cot = std::cos(a.theta) / std::sin(a.theta);
  const double xr = fr.x_over_z, yr = fr.y_over_z;
  const double xt = ft.x_over_z, yt = ft.y_over_z;

  CorrelationResult out;
  out.component = label;
  out.envelope = env;
  out.paraxial_warning = offaxial(fr, ft);

  std::complex<double> constant = 0.0;

  switch (label) {
    case ComponentLabel::HVHV: {
      require_nonsingular(f.r_p, "r_p");
      require_nonsingular(f.r_s, "r_s");
      require_nonsingular(f.t_p, "t_p");
      require_nonsingular(f.t_s, "t_s");
      const double rpart = yr * (f.r_p + f.r_s) / (f.r_p * f.r_s) *
                           (xr * (f.dr_p + f.dr_s) + f.r_p + f.r_s);
      const double tpart = yt * (f.t_p - a.eta * f.t_s) / (f.t_p * f.t_s) *
                           (-xt * (f.dt_p + f.dt_s) + f.t_p + f.t_s);
      out.geometric_prefactor = -cot * cot * rpart * tpart;
      constant = aberration_term(f.t_p - a.eta * f.t_s, f, a, cot, beam);
      out.aberration_term = constant;
      break;
    }
    case ComponentLabel::VVHH: {
      require_nonsingular(f.r_s, "r_s");
      require_nonsingular(f.t_p, "t_p");
      const double rnum = hhvh_reflected_numerator(f, a, fr);
      const double tnum =
          std::pow(cot * kPi * yt, 2) * (f.t_s - a.eta * f.t_p) *
              (a.eta * f.t_s - f.t_p) -
          std::pow(kPi * f.t_s - kPi * xt * a.eta * f.dt_s, 2);
      out.geometric_prefactor = rnum / (2.0 * kPi * kPi * f.r_s * f.r_s) *
                                tnum / (2.0 * kPi * kPi * f.t_p * f.t_p);
      constant = 1.0;
      break;
    }
    case ComponentLabel::VVVV: {
      require_nonsingular(f.r_s, "r_s");
      require_nonsingular(f.t_s, "t_s");
      const double rnum = hhvh_reflected_numerator(f, a, fr);
      const double tnum =
          std::pow(cot * kPi * yt, 2) * (f.t_s - a.eta * f.t_p) *
              (a.eta * f.t_s - f.t_p) -
          std::pow(kPi * f.t_p - kPi * xt * a.eta * f.dt_p, 2);
      out.geometric_prefactor = rnum / (2.0 * kPi * kPi * f.r_s * f.r_s) *
                                tnum / (2.0 * kPi * kPi * f.t_s * f.t_s);
      constant = 1.0;
      break;
    }
    case ComponentLabel::HHVH: {
      require_nonsingular(f.r_p, "r_p");
      require_nonsingular(f.t_p, "t_p");
      require_nonsingular(f.t_s, "t_s");
      const double rnum = hhvh_reflected_numerator(f, a, fr);
      const double tpart = yt * (f.t_s - a.eta * f.t_p) / (f.t_p * f.t_s) *
                           (xt * (f.dt_p + f.dt_s) - f.t_p - f.t_s);
      out.geometric_prefactor =
          rnum / (2.0 * kPi * kPi * f.r_p * f.r_p) * tpart;
      constant = aberration_term(f.t_s - a.eta * f.t_p, f, a, cot, beam);
      out.aberration_term = constant;
      break;
    }
  }

  out.value = out.geometric_prefactor * env + constant;
  out.magnitude = std::abs(out.value);
  out.sub_poissonian = out.magnitude < 1.0 - 1e-9;
  return out;
}

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::theta: return "theta";
    case SweepAxis::dy_over_dx: return "dy_over_dx";
    case SweepAxis::dz: return "dz";
    case SweepAxis::w0_over_lambda: return "w0_over_lambda";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view s) {
  for (SweepAxis a : {SweepAxis::theta, SweepAxis::dy_over_dx, SweepAxis::dz,
                      SweepAxis::w0_over_lambda}) {
    if (s == to_string(a)) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<SweepRow> sweep(const std::vector<ComponentLabel>& labels,
                            const AxisSpec& axis, const SweepConfig& fixed) {
  if (axis.samples < 2) {
    throw DomainError("axis: at least 2 samples required");
  }
  if (!(axis.stop >= axis.start)) {
    throw DomainError("axis: stop must be >= start");
  }
  if (axis.axis == SweepAxis::dy_over_dx && fixed.geom.dx == 0.0) {
    throw DomainError("axis: dy_over_dx sweep needs dx != 0");
  }

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(axis.samples) * labels.size());
  for (int i = 0; i < axis.samples; ++i) {
    const double v =
        axis.start + (axis.stop - axis.start) * i / (axis.samples - 1);
    double theta = fixed.theta;
    DetectorGeometry geom = fixed.geom;
    BeamParams beam = fixed.beam;
    switch (axis.axis) {
      case SweepAxis::theta: theta = v * kDegToRad; break;
      case SweepAxis::dy_over_dx: geom.dy = v * geom.dx; break;
      case SweepAxis::dz: geom.dz = v; break;
      case SweepAxis::w0_over_lambda:
        beam = BeamParams::make(v * beam.lambda, beam.lambda, beam.delta_s,
                                beam.delta_if);
        break;
    }
    for (ComponentLabel label : labels) {
      SweepRow row;
      row.axis_value = v;
      row.component = label;
      try {
        const InterfaceAngles a = snell(theta, fixed.n);
        const FresnelSet f = fresnel_derivatives(a);
        const CorrelationResult r = g2_component(label, f, a, geom, beam);
        row.value = r.value;
        row.magnitude = r.magnitude;
        row.envelope = r.envelope;
        row.ok = true;
        std::string flags;
        const auto add = [&flags](const char* tok) {
          if (!flags.empty()) flags += ';';
          flags += tok;
        };
        if (r.sub_poissonian) add("subpoissonian");
        if (r.paraxial_warning) add("paraxial");
        row.flags = flags;
      } catch (const SingularCoefficientError&) {
        row.ok = false;
        row.flags = "singular";
        row.value = {std::numeric_limits<double>::quiet_NaN(), 0.0};
        row.magnitude = std::numeric_limits<double>::quiet_NaN();
        row.envelope = std::numeric_limits<double>::quiet_NaN();
      } catch (const DomainError&) {
        row.ok = false;
        row.flags = "domain";
        row.value = {std::numeric_limits<double>::quiet_NaN(), 0.0};
        row.magnitude = std::numeric_limits<double>::quiet_NaN();
        row.envelope = std::numeric_limits<double>::quiet_NaN();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace qvcz
