#pragma once

#include <array>
#include <complex>

#include "qvcz/fresnel.hpp"
#include "qvcz/geometry.hpp"

namespace qvcz {

using Complex = std::complex<double>;
using Matrix2c = std::array<std::array<Complex, 2>, 2>;

/// Dimensionless transverse momenta of one angular-spectrum component,
/// k_x/k and k_y/k.  The first-order expansion behind the Jones matrices
/// is trustworthy for |k_x/k|, |k_y/k| well below one; 0.2 is used as a
/// soft warning threshold.
struct TransverseMomenta {
  double kx_over_k = 0.0;
  double ky_over_k = 0.0;

  bool within_paraxial_band() const {
    return kx_over_k <= 0.2 && kx_over_k >= -0.2 && ky_over_k <= 0.2 &&
           ky_over_k >= -0.2;
  }
};

/// First-order Jones matrix of a reflected or transmitted beam, row/column
/// order (p ≡ H, s ≡ V).
struct JonesMatrix {
  Matrix2c e{};
  Frame kind = Frame::reflected;
};

/// Reflected-beam matrix:
///   [ r_p + r_p' kx          (r_p + r_s) cot θ ky ]
///   [ −(r_p + r_s) cot θ ky  r_s + r_s' kx        ]
JonesMatrix jones_reflected(const FresnelSet& f, const InterfaceAngles& a,
                            const TransverseMomenta& k);

/// Transmitted-beam matrix:
///   [ t_p + η t_p' kx        (t_p − η t_s) cot θ ky ]
///   [ (η t_p − t_s) cot θ ky t_s + η t_s' kx        ]
JonesMatrix jones_transmitted(const FresnelSet& f, const InterfaceAngles& a,
                              const TransverseMomenta& k);

/// Same matrices continued to complex momenta.  The elements are affine in
/// (kx, ky) with real coefficients, so this is the analytic continuation
/// used by the quadrature that absorbs the far-field phase.
JonesMatrix jones_reflected_at(const FresnelSet& f, const InterfaceAngles& a,
                               Complex kx_over_k, Complex ky_over_k);
JonesMatrix jones_transmitted_at(const FresnelSet& f, const InterfaceAngles& a,
                                 Complex kx_over_k, Complex ky_over_k);

/// J† J, the polarization transfer of an unpolarized beam through one
/// matrix.  Hermitian by construction.
Matrix2c polarization_transfer(const JonesMatrix& j);

}  // namespace qvcz
