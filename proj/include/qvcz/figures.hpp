#pragma once

#include "qvcz/io.hpp"

namespace qvcz {

/// Canonical result tables behind the published parameter sweeps.  All
/// parameters are baked in (n = 1.5, theta = 60 deg where fixed,
/// dx/dz = 0.5, dy/dz = 0.5 for the angle sweeps, w0 = 14 mm,
/// lambda = 8.5 mm) and the output is deterministic byte for byte.

/// Detector-separation sweep of all four components at theta = 60 deg.
/// Columns: dy_over_dx, dy_over_dz, component, magnitude, envelope.
/// Both axis readings are emitted so the separation-scaling ambiguity can
/// be resolved from one file.
Table fig2_table();

/// Incidence-angle sweep of the component magnitudes.
/// Columns: theta_deg, component, magnitude.
Table fig3a_table();

/// Incidence-angle sweep of the reflected HH coherence (value and
/// unnormalized numerator) alongside the VVVV/VVHH magnitudes.
/// Columns: theta_deg, quantity, value.
Table fig3b_table();

/// (dz, w0/lambda) grid of |g2_VVVV| with dx/dz = dy/dz = 0.5 held fixed.
/// Columns: dz_mm, w0_over_lambda, magnitude_vvvv.
Table fig4_table();

/// Fresnel coefficient curves. Columns: theta_deg, r_p, r_s, t_p, t_s,
/// dr_p, dr_s, dt_p, dt_s.
Table fresnel_table(double n, double start_deg, double stop_deg, int samples);

}  // namespace qvcz
