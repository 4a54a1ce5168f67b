#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvcz/fresnel.hpp"
#include "qvcz/geometry.hpp"
#include "qvcz/moments.hpp"

namespace qvcz {

/// The four post-selected second-order coherence components with closed
/// forms.  First index pair: reflected beam, second: transmitted beam.
enum class ComponentLabel { HVHV, VVHH, VVVV, HHVH };

inline constexpr std::array<ComponentLabel, 4> kAllComponents = {
    ComponentLabel::HVHV, ComponentLabel::VVHH, ComponentLabel::VVVV,
    ComponentLabel::HHVH};

const char* to_string(ComponentLabel c);
std::optional<ComponentLabel> parse_component(std::string_view s);

/// One evaluated g²-component, split into the factors of the closed form:
///   value = geometric_prefactor * envelope + constant,
/// where the constant is +1 for VVHH/VVVV (indistinguishability) and the
/// aberration term for HVHV/HHVH (zero for the fundamental Gaussian).
struct CorrelationResult {
  std::complex<double> value;
  double magnitude = 0.0;
  double envelope = 0.0;
  std::complex<double> geometric_prefactor;
  std::complex<double> aberration_term;
  ComponentLabel component = ComponentLabel::VVVV;
  bool sub_poissonian = false;   ///< magnitude < 1 − 1e−9
  bool paraxial_warning = false; ///< some frame ratio exceeds 0.2
};

/// Shared exponential factor
///   exp(−(w0² k0²/2) [ (Δx_r/Δz_r)² + (Δy_r/Δz_r)² + (Δx_t/Δz_t)² + (Δy_t/Δz_t)² ]),
/// strictly in (0, 1].  Depends on (w0, lambda) only through w0 k0.
double envelope(const BeamParams& beam, const FrameRatios& fr,
                const FrameRatios& ft);

/// Evaluates one closed-form component.  Requires the derivative fields of
/// `fres` to be populated.  Throws SingularCoefficientError when a
/// coefficient appearing in a denominator of that component is below 1e−14
/// in magnitude (r_p at Brewster for HHVH/HVHV, every r at n = 1).
CorrelationResult g2_component(ComponentLabel label, const FresnelSet& fres,
                               const InterfaceAngles& angles,
                               const DetectorGeometry& geom,
                               const BeamParams& beam);

/// Reflected-beam HH factor of the HHVH closed form:
///   numerator = (x_r r_p' + π r_p)² − (cot θ · y_r · π (r_p + r_s))²
///   value     = numerator / (2 π² r_p²)
/// Near Brewster the normalization vanishes; `singular` is set, `value` is
/// NaN, and the numerator remains usable for zero-crossing detection.
struct HhCoherence {
  double value = 0.0;
  double numerator = 0.0;
  bool singular = false;
};

HhCoherence reflected_hh_coherence(const FresnelSet& fres,
                                   const InterfaceAngles& angles,
                                   const FrameRatios& fr);

/// The numerator above; also the first-factor numerator of the HHVH and
/// VVHH/VVVV closed forms.
double hhvh_reflected_numerator(const FresnelSet& fres,
                                const InterfaceAngles& angles,
                                const FrameRatios& fr);

enum class SweepAxis { theta, dy_over_dx, dz, w0_over_lambda };

const char* to_string(SweepAxis a);
std::optional<SweepAxis> parse_axis(std::string_view s);

/// theta axis values are in degrees; dz in mm; the others dimensionless.
struct AxisSpec {
  SweepAxis axis = SweepAxis::theta;
  double start = 0.0;
  double stop = 0.0;
  int samples = 0;
};

/// Fixed parameters of a sweep; the axis overrides the matching entry.
struct SweepConfig {
  double n = 1.5;
  double theta = 0.0;  ///< rad
  DetectorGeometry geom;
  BeamParams beam;
};

struct SweepRow {
  double axis_value = 0.0;
  ComponentLabel component = ComponentLabel::VVVV;
  std::complex<double> value;
  double magnitude = 0.0;
  double envelope = 0.0;
  bool ok = false;
  std::string flags;  ///< semicolon-joined: singular, domain, paraxial, subpoissonian
};

/// Deterministic row-per-(sample, component) table ordered by axis value.
/// Per-point errors become flagged rows instead of aborting the sweep.
std::vector<SweepRow> sweep(const std::vector<ComponentLabel>& labels,
                            const AxisSpec& axis, const SweepConfig& fixed);

}  // namespace qvcz
