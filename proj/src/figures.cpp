#include "qvcz/figures.hpp"

#include <cmath>
#include <numbers>

#include "qvcz/coherence.hpp"
#include "qvcz/fresnel.hpp"

namespace qvcz {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Defaults {
  double n = 1.5;
  double theta_deg = 60.0;
  double w0 = 14.0;
  double lambda = 8.5;
};

std::string param_echo(const Defaults& d, const std::string& extra) {
  std::string s = "n=" + format_double(d.n) +
                  " theta_deg=" + format_double(d.theta_deg) +
                  " w0_mm=" + format_double(d.w0) +
                  " lambda_mm=" + format_double(d.lambda);
  if (!extra.empty()) {
    s += ' ';
    s += extra;
  }
  return s;
}

}  // namespace

Table fig2_table() {
  const Defaults d;
  Table t;
  t.comments = {"qvcz figure fig2",
                param_echo(d, "dx_over_dz=0.5 axis=dy_over_dx:0:2:201")};
  t.columns = {"dy_over_dx", "dy_over_dz", "component", "magnitude",
               "envelope"};

  SweepConfig cfg;
  cfg.n = d.n;
  cfg.theta = d.theta_deg * kDeg;
  cfg.geom = DetectorGeometry{0.5, 0.0, 1.0};
  cfg.beam = BeamParams::make(d.w0, d.lambda);
  const AxisSpec axis{SweepAxis::dy_over_dx, 0.0, 2.0, 201};
  const std::vector<ComponentLabel> labels(kAllComponents.begin(),
                                           kAllComponents.end());
  for (const SweepRow& row : sweep(labels, axis, cfg)) {
    t.rows.push_back({Cell{row.axis_value}, Cell{row.axis_value * 0.5},
                      Cell{std::string(to_string(row.component))},
                      Cell{row.magnitude}, Cell{row.envelope}});
  }
  return t;
}

Table fig3a_table() {
  const Defaults d;
  Table t;
  t.comments = {"qvcz figure fig3a",
                param_echo(d, "dx_over_dz=0.5 dy_over_dz=0.5 axis=theta:0.25:89.75:359")};
  t.columns = {"theta_deg", "component", "magnitude"};

  SweepConfig cfg;
  cfg.n = d.n;
  cfg.theta = d.theta_deg * kDeg;
  cfg.geom = DetectorGeometry{0.5, 0.5, 1.0};
  cfg.beam = BeamParams::make(d.w0, d.lambda);
  const AxisSpec axis{SweepAxis::theta, 0.25, 89.75, 359};
  const std::vector<ComponentLabel> labels(kAllComponents.begin(),
                                           kAllComponents.end());
  for (const SweepRow& row : sweep(labels, axis, cfg)) {
    t.rows.push_back({Cell{row.axis_value},
                      Cell{std::string(to_string(row.component))},
                      Cell{row.magnitude}});
  }
  return t;
}

Table fig3b_table() {
  const Defaults d;
  Table t;
  t.comments = {"qvcz figure fig3b",
                param_echo(d, "dx_over_dz=0.5 dy_over_dz=0.5 axis=theta:0.25:89.75:359")};
  t.columns = {"theta_deg", "quantity", "value"};

  const DetectorGeometry geom{0.5, 0.5, 1.0};
  const BeamParams beam = BeamParams::make(d.w0, d.lambda);
  for (int i = 0; i < 359; ++i) {
    const double deg = 0.25 + (89.75 - 0.25) * i / 358.0;
    const InterfaceAngles a = snell(deg * kDeg, d.n);
    const FresnelSet f = fresnel_derivatives(a);
    const FrameRatios fr = reflected_frame(geom, a.theta);
    const HhCoherence hh = reflected_hh_coherence(f, a, fr);
    t.rows.push_back({Cell{deg}, Cell{std::string("g_hh")}, Cell{hh.value}});
    t.rows.push_back(
        {Cell{deg}, Cell{std::string("g_hh_numerator")}, Cell{hh.numerator}});
    for (ComponentLabel c : {ComponentLabel::VVVV, ComponentLabel::VVHH}) {
      const CorrelationResult r = g2_component(c, f, a, geom, beam);
      const std::string name =
          c == ComponentLabel::VVVV ? "vvvv_magnitude" : "vvhh_magnitude";
      t.rows.push_back({Cell{deg}, Cell{name}, Cell{r.magnitude}});
    }
  }
  return t;
}

Table fig4_table() {
  const Defaults d;
  Table t;
  t.comments = {"qvcz figure fig4",
                param_echo(d, "dx_over_dz=0.5 dy_over_dz=0.5 "
                              "dz_mm=50:500:10 w0_over_lambda=0.1:2:20")};
  t.columns = {"dz_mm", "w0_over_lambda", "magnitude_vvvv"};

  const InterfaceAngles a = snell(d.theta_deg * kDeg, d.n);
  const FresnelSet f = fresnel_derivatives(a);
  for (int zi = 0; zi < 10; ++zi) {
    const double dz = 50.0 + 450.0 * zi / 9.0;
    const DetectorGeometry geom{0.5 * dz, 0.5 * dz, dz};
    // alternate the stored absolute scale between stripes; the magnitudes
    // depend only on the ratio w0/lambda
    const double lambda = (zi % 2 == 0) ? d.lambda : 2.0 * d.lambda;
    for (int wi = 0; wi < 20; ++wi) {
      const double ratio = 0.1 + (2.0 - 0.1) * wi / 19.0;
      const BeamParams beam = BeamParams::make(ratio * lambda, lambda);
      const CorrelationResult r =
          g2_component(ComponentLabel::VVVV, f, a, geom, beam);
      t.rows.push_back({Cell{dz}, Cell{ratio}, Cell{r.magnitude}});
    }
  }
  return t;
}

Table fresnel_table(double n, double start_deg, double stop_deg, int samples) {
  Table t;
  t.comments = {"qvcz fresnel",
                "n=" + format_double(n) + " theta_deg=" +
                    format_double(start_deg) + ":" + format_double(stop_deg) +
                    ":" + std::to_string(samples)};
  t.columns = {"theta_deg", "r_p", "r_s", "t_p", "t_s",
               "dr_p", "dr_s", "dt_p", "dt_s"};
  for (int i = 0; i < samples; ++i) {
    const double deg =
        samples == 1
            ? start_deg
            : start_deg + (stop_deg - start_deg) * i / (samples - 1);
    const InterfaceAngles a = snell(deg * kDeg, n);
    const FresnelSet f = fresnel_derivatives(a);
    t.rows.push_back({Cell{deg}, Cell{f.r_p}, Cell{f.r_s}, Cell{f.t_p},
                      Cell{f.t_s}, Cell{f.dr_p}, Cell{f.dr_s}, Cell{f.dt_p},
                      Cell{f.dt_s}});
  }
  return t;
}

}  // namespace qvcz
