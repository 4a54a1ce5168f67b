#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qvcz/coherence.hpp"
#include "qvcz/fresnel.hpp"
#include "qvcz/geometry.hpp"
#include "qvcz/jones.hpp"
#include "qvcz/moments.hpp"

namespace qvcz {

/// Two-point coherence matrix of one secondary beam at the detector pair,
/// indices (alpha, beta) in {H=0, V=1}, normalized so that a unit transfer
/// at zero separation gives the identity.
struct TwoPointCoherence {
  Matrix2c m{};
  Frame frame = Frame::reflected;
  double sigma_x = 0.0;  ///< signed separation ratio entering the phase
  double sigma_y = 0.0;
  double z = 0.0;        ///< frame propagation distance
  int nodes = 0;
  DetectorGeometry geom; ///< lab geometry the ratios were derived from
};

/// Post-selected four-point correlation tensor indexed
/// (alpha, beta, alpha', beta'): direct (separation-pinned) term plus
/// exchange (indistinguishability) term.
struct FourPointCorrelation {
  using Tensor = std::array<std::array<std::array<std::array<std::complex<double>, 2>, 2>, 2>, 2>;
  Tensor tensor{};
  Tensor direct{};
  Tensor exchange{};
  double normalization = 1.0;
};

std::complex<double> component(const FourPointCorrelation& fp,
                               ComponentLabel label);

/// Independent numerical evaluation of the source → interface → Fresnel
/// propagation chain.  Momentum integrals over the Gaussian angular
/// spectrum are done with tensor-product Gauss–Hermite quadrature; the
/// oscillatory far-field factor is absorbed by completing the square, so
/// the remaining integrand is a polynomial of degree <= 2 times the
/// Gaussian weight and the rule is exact for any nodes >= 8 per axis.
/// Shares only the fresnel/jones/geometry primitives with the closed-form
/// module, never its algebra.
class Oracle {
 public:
  /// Throws QuadratureValidityError when w0*k0 < 3 (paraxial validity).
  Oracle(const BeamParams& beam, const FresnelSet& fres,
         const InterfaceAngles& angles, const DetectorGeometry& geom,
         int nodes = 16);

  /// Delta-reduced two-point coherence of one beam.  The direct term pins
  /// each beam's momenta at its own separation ratios; the reflected slot
  /// pair is (detector A, detector B) and the transmitted pair (B, A), so
  /// the transmitted phase carries the opposite sign.
  TwoPointCoherence propagate_two_point(Frame frame) const;

  /// Direct term = product of the two per-beam coherences.  Exchange term:
  /// the indistinguishability sum ties the shared source points across the
  /// beams at each detector separately, pinning each beam's momenta at the
  /// half difference of the two frames' viewing ratios of one detector;
  /// the unpolarized source keeps the identity polarization structure in
  /// both terms, so the same per-beam transfers apply there.  Throws
  /// ArgumentMismatchError unless jr/jt come from this detector arrangement.
  FourPointCorrelation assemble_four_point(const TwoPointCoherence& jr,
                                           const TwoPointCoherence& jt) const;

  /// Quadrature envelope of one beam with the polarization transfer frozen
  /// at zero momentum; the pure van Cittert–Zernike Gaussian factor.
  double scalar_envelope(Frame frame) const;

  int nodes() const { return nodes_; }
  const BeamParams& beam() const { return beam_; }

 private:
  Matrix2c transfer_ft(Frame frame, double sigma_x, double sigma_y) const;

  BeamParams beam_;
  FresnelSet fres_;
  InterfaceAngles angles_;
  DetectorGeometry geom_;
  FrameRatios fr_, ft_;
  int nodes_;
};

/// One sweep point of a closed-form versus oracle comparison.
struct ComparisonRow {
  double axis = 0.0;
  ComponentLabel component = ComponentLabel::VVVV;
  std::complex<double> closed;
  std::complex<double> oracle_scaled;  ///< oracle value times the component constant
  double rel_dev = 0.0;
  std::string flags;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::array<double, 4> scale{};  ///< per-component calibration constants
  std::size_t calibration_index = 0;
  double max_rel_dev = 0.0;
};

/// Fixes one real constant per component by least-squares at the
/// calibration point, then reports relative deviations everywhere else.
/// Throws CalibrationError when |closed| < 1e−10 at the calibration point.
ComparisonReport normalize_and_compare(
    const std::vector<double>& axis,
    const std::vector<std::array<std::complex<double>, 4>>& closed,
    const std::vector<std::array<std::complex<double>, 4>>& oracle,
    std::size_t calibration_index);

}  // namespace qvcz
