// qvcz: second-order coherence of Gaussian beams reflected and refracted
// at a dielectric interface.  Subcommands: fresnel, g2, figure, validate.
// Exit codes: 0 success, 1 validation failure, 2 usage/domain error,
// 3 I/O error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvcz/coherence.hpp"
#include "qvcz/errors.hpp"
#include "qvcz/figures.hpp"
#include "qvcz/fresnel.hpp"
#include "qvcz/io.hpp"
#include "qvcz/validation.hpp"

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct OutputOpts {
  std::string path;
  std::string format = "csv";
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--out", o.path, "output file (stdout when omitted)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

int emit(const qvcz::Table& t, const OutputOpts& o) {
  const std::string content =
      o.format == "json" ? qvcz::to_json(t) : qvcz::to_csv(t);
  if (o.path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    qvcz::atomic_write(o.path, content);
  }
  return 0;
}

struct Range {
  double start = 0.0;
  double stop = 0.0;
  int samples = 1;
};

// "60" or "start:stop:samples"
Range parse_theta_range(const std::string& text) {
  Range r;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    r.start = r.stop = std::stod(text);
    r.samples = 1;
    return r;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw qvcz::DomainError("--theta: range must be start:stop:samples");
  }
  try {
    r.start = std::stod(text.substr(0, c1));
    r.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.samples = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw qvcz::DomainError("--theta: malformed range value");
  }
  if (r.samples < 2 || !(r.stop > r.start)) {
    throw qvcz::DomainError(
        "--theta: range needs stop > start and samples >= 2");
  }
  return r;
}

// "name:start:stop:samples" with name in {theta, dy_over_dx, dz,
// w0_over_lambda}
qvcz::AxisSpec parse_axis_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto c = text.find(':', pos);
    if (c == std::string::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, c - pos));
    pos = c + 1;
  }
  if (parts.size() != 4) {
    throw qvcz::DomainError("--axis: expected name:start:stop:samples");
  }
  const auto axis = qvcz::parse_axis(parts[0]);
  if (!axis) {
    throw qvcz::DomainError(
        "--axis: name must be one of theta, dy_over_dx, dz, w0_over_lambda");
  }
  qvcz::AxisSpec spec;
  spec.axis = *axis;
  try {
    spec.start = std::stod(parts[1]);
    spec.stop = std::stod(parts[2]);
    spec.samples = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw qvcz::DomainError("--axis: malformed numeric field");
  }
  return spec;
}

std::vector<qvcz::ComponentLabel> parse_components(const std::string& text) {
  if (text.empty()) {
    return {qvcz::kAllComponents.begin(), qvcz::kAllComponents.end()};
  }
  std::vector<qvcz::ComponentLabel> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto c = text.find(',', pos);
    const std::string tok =
        c == std::string::npos ? text.substr(pos) : text.substr(pos, c - pos);
    const auto label = qvcz::parse_component(tok);
    if (!label) {
      throw qvcz::DomainError("--components: unknown component " + tok);
    }
    out.push_back(*label);
    if (c == std::string::npos) {
      break;
    }
    pos = c + 1;
  }
  return out;
}

const char* axis_column(qvcz::SweepAxis a) {
  switch (a) {
    case qvcz::SweepAxis::theta: return "theta_deg";
    case qvcz::SweepAxis::dy_over_dx: return "dy_over_dx";
    case qvcz::SweepAxis::dz: return "dz_mm";
    case qvcz::SweepAxis::w0_over_lambda: return "w0_over_lambda";
  }
  return "axis";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coherence of reflected/refracted Gaussian beams at a dielectric "
      "interface"};
  app.require_subcommand(1);

  // fresnel
  auto* cmd_fresnel = app.add_subcommand(
      "fresnel", "Fresnel coefficients and angular derivatives");
  double fr_n = 1.5;
  std::string fr_theta = "0.1:89.9:500";
  OutputOpts fr_out;
  cmd_fresnel->add_option("--n", fr_n, "refractive index (>= 1)");
  cmd_fresnel->add_option("--theta", fr_theta,
                          "incidence angle in degrees, value or "
                          "start:stop:samples");
  add_output_opts(cmd_fresnel, fr_out);

  // g2
  auto* cmd_g2 = app.add_subcommand(
      "g2", "second-order coherence components, single point or sweep");
  double g2_n = 1.5, g2_theta = 60.0, g2_dx = 0.5, g2_dy = 0.0, g2_dz = 1.0;
  double g2_w0 = 14.0, g2_lambda = 8.5, g2_ds = 0.0, g2_dif = 0.0;
  std::string g2_components, g2_axis;
  OutputOpts g2_out;
  cmd_g2->add_option("--n", g2_n, "refractive index (>= 1)");
  cmd_g2->add_option("--theta", g2_theta, "incidence angle, degrees");
  cmd_g2->add_option("--dx", g2_dx, "vertical detector offset, mm");
  cmd_g2->add_option("--dy", g2_dy, "horizontal detector separation, mm");
  cmd_g2->add_option("--dz", g2_dz, "screen distance, mm");
  cmd_g2->add_option("--w0", g2_w0, "beam waist, mm");
  cmd_g2->add_option("--lambda", g2_lambda, "wavelength, mm");
  cmd_g2->add_option("--delta-s", g2_ds, "shift-area moment, mm^2");
  cmd_g2->add_option("--delta-if", g2_dif, "Imbert-Fedorov moment, mm");
  cmd_g2->add_option("--components", g2_components,
                     "comma list of HVHV,VVHH,VVVV,HHVH (default all)");
  cmd_g2->add_option("--axis", g2_axis,
                     "sweep spec name:start:stop:samples over theta, "
                     "dy_over_dx, dz or w0_over_lambda");
  add_output_opts(cmd_g2, g2_out);

  // figure
  auto* cmd_figure = app.add_subcommand(
      "figure", "canonical sweep tables (fig2, fig3a, fig3b, fig4)");
  std::string fig_name;
  OutputOpts fig_out;
  cmd_figure->add_option("name", fig_name, "one of fig2, fig3a, fig3b, fig4")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3a", "fig3b", "fig4"}));
  add_output_opts(cmd_figure, fig_out);

  // validate
  auto* cmd_validate = app.add_subcommand(
      "validate", "run the acceptance criteria and invariant suite");
  std::string val_out;
  std::string val_fault;
  cmd_validate->add_option("--out", val_out,
                           "write the full report to this path");
  cmd_validate
      ->add_option("--inject-fault", val_fault,
                   "perturbation hook for exercising the failure path")
      ->check(CLI::IsMember({"flip_rs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }

  try {
    if (cmd_fresnel->parsed()) {
      const Range r = parse_theta_range(fr_theta);
      return emit(qvcz::fresnel_table(fr_n, r.start, r.stop, r.samples),
                  fr_out);
    }

    if (cmd_g2->parsed()) {
      const std::vector<qvcz::ComponentLabel> labels =
          parse_components(g2_components);
      qvcz::SweepConfig cfg;
      cfg.n = g2_n;
      cfg.theta = g2_theta * kDeg;
      cfg.geom = qvcz::DetectorGeometry{g2_dx, g2_dy, g2_dz};
      cfg.beam = qvcz::BeamParams::make(g2_w0, g2_lambda, g2_ds, g2_dif);

      std::vector<qvcz::SweepRow> rows;
      qvcz::AxisSpec axis{qvcz::SweepAxis::theta, g2_theta, g2_theta, 2};
      if (!g2_axis.empty()) {
        axis = parse_axis_spec(g2_axis);
        rows = qvcz::sweep(labels, axis, cfg);
      } else {
        // single point; domain errors surface directly, singular
        // coefficients become flagged rows
        const qvcz::InterfaceAngles a = qvcz::snell(cfg.theta, cfg.n);
        const qvcz::FresnelSet f = qvcz::fresnel_derivatives(a);
        for (qvcz::ComponentLabel label : labels) {
          qvcz::SweepRow row;
          row.axis_value = g2_theta;
          row.component = label;
          try {
            const qvcz::CorrelationResult r =
                qvcz::g2_component(label, f, a, cfg.geom, cfg.beam);
            row.value = r.value;
            row.magnitude = r.magnitude;
            row.envelope = r.envelope;
            row.ok = true;
            if (r.sub_poissonian) row.flags = "subpoissonian";
            if (r.paraxial_warning) {
              row.flags += row.flags.empty() ? "paraxial" : ";paraxial";
            }
          } catch (const qvcz::SingularCoefficientError&) {
            row.ok = false;
            row.flags = "singular";
            row.value = {std::nan(""), 0.0};
            row.magnitude = std::nan("");
            row.envelope = std::nan("");
          }
          rows.push_back(std::move(row));
        }
      }

      qvcz::Table t;
      t.comments = {
          "qvcz g2",
          "n=" + qvcz::format_double(g2_n) +
              " theta_deg=" + qvcz::format_double(g2_theta) +
              " dx_mm=" + qvcz::format_double(g2_dx) +
              " dy_mm=" + qvcz::format_double(g2_dy) +
              " dz_mm=" + qvcz::format_double(g2_dz) +
              " w0_mm=" + qvcz::format_double(g2_w0) +
              " lambda_mm=" + qvcz::format_double(g2_lambda) +
              " delta_s=" + qvcz::format_double(g2_ds) +
              " delta_if=" + qvcz::format_double(g2_dif) +
              (g2_axis.empty() ? "" : " axis=" + g2_axis)};
      t.columns = {axis_column(axis.axis), "component", "g2_re", "g2_im",
                   "magnitude", "envelope", "flags"};
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const qvcz::SweepRow& row = rows[i];
        t.rows.push_back({qvcz::Cell{row.axis_value},
                          qvcz::Cell{std::string(to_string(row.component))},
                          qvcz::Cell{row.value.real()},
                          qvcz::Cell{row.value.imag()},
                          qvcz::Cell{row.magnitude}, qvcz::Cell{row.envelope},
                          qvcz::Cell{row.flags.empty() ? std::string("-")
                                                       : row.flags}});
      }
      return emit(t, g2_out);
    }

    if (cmd_figure->parsed()) {
      qvcz::Table t;
      if (fig_name == "fig2") {
        t = qvcz::fig2_table();
      } else if (fig_name == "fig3a") {
        t = qvcz::fig3a_table();
      } else if (fig_name == "fig3b") {
        t = qvcz::fig3b_table();
      } else {
        t = qvcz::fig4_table();
      }
      return emit(t, fig_out);
    }

    if (cmd_validate->parsed()) {
      const qvcz::FaultInjection fault = val_fault == "flip_rs"
                                             ? qvcz::FaultInjection::flip_rs
                                             : qvcz::FaultInjection::none;
      std::vector<qvcz::CheckResult> checks =
          qvcz::run_acceptance_checks(fault);
      const std::vector<qvcz::CheckResult> inv = run_invariant_checks(fault);
      checks.insert(checks.end(), inv.begin(), inv.end());

      std::string report = "== criteria ==\n";
      report += qvcz::render_criteria_summary(checks);
      report += "== checks ==\n";
      report += qvcz::render_report(checks);
      report += "== closed-form vs quadrature comparison ==\n";
      report += qvcz::render_comparison(qvcz::run_oracle_comparison());
      if (val_out.empty()) {
        std::fwrite(report.data(), 1, report.size(), stdout);
      } else {
        qvcz::atomic_write(val_out, report);
        std::cout << (qvcz::all_pass(checks) ? "validate: all checks pass"
                                             : "validate: failures recorded")
                  << ", report written to " << val_out << std::endl;
      }
      return qvcz::all_pass(checks) ? 0 : 1;
    }
  } catch (const qvcz::IoError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const qvcz::DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
