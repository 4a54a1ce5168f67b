#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qvcz/coherence.hpp"
#include "qvcz/errors.hpp"
#include "qvcz/fresnel.hpp"
#include "qvcz/oracle.hpp"

using namespace qvcz;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

BeamParams beam() { return BeamParams::make(4.25, 8.5); }  // w0 k0 = pi

struct Setup {
  InterfaceAngles a;
  FresnelSet f;
};

Setup at(double deg) {
  Setup s{snell(deg * kDeg, 1.5), {}};
  s.f = fresnel_derivatives(s.a);
  return s;
}

FourPointCorrelation assemble(const Oracle& o) {
  return o.assemble_four_point(o.propagate_two_point(Frame::reflected),
                               o.propagate_two_point(Frame::transmitted));
}

}  // namespace

TEST_CASE("constructor validity") {
  const Setup s = at(60.0);
  const DetectorGeometry g{0.5, 0.25, 1.0};
  CHECK_THROWS_AS(Oracle(BeamParams::make(1.0, 8.5), s.f, s.a, g, 16),
                  QuadratureValidityError);
  CHECK_THROWS_AS(Oracle(beam(), s.f, s.a, g, 4), QuadratureValidityError);
  CHECK_NOTHROW(Oracle(beam(), s.f, s.a, g, 16));
}

TEST_CASE("momentum-independent diagonal transfer") {
  // synthetic coefficient set with r_p + r_s = 0 and zero derivatives: the
  // reflected matrix is exactly diag(r_p, r_s) for every momentum
  const Setup s = at(60.0);
  FresnelSet diag{};
  diag.r_p = 0.3;
  diag.r_s = -0.3;
  const DetectorGeometry g{0.5, 0.25, 1.0};
  const Oracle o(beam(), diag, s.a, g, 16);
  const TwoPointCoherence m = o.propagate_two_point(Frame::reflected);
  const double env = o.scalar_envelope(Frame::reflected);
  CHECK(m.m[0][0].real() == doctest::Approx(0.09 * env).epsilon(1e-13));
  CHECK(m.m[1][1].real() == doctest::Approx(0.09 * env).epsilon(1e-13));
  CHECK(std::abs(m.m[0][1]) < 1e-16);
  CHECK(std::abs(m.m[1][0]) < 1e-16);
  CHECK(std::abs(m.m[0][0].imag()) < 1e-16);
}

TEST_CASE("per-beam envelope carries the closed-form coefficient") {
  // the quadrature VV magnitude of the diagonal transfer decays as
  // exp(-(w0^2 k0^2/2)(x^2 + y^2)) per beam, which is what makes the
  // product over both beams reproduce the closed-form envelope
  const Setup s = at(60.0);
  FresnelSet diag{};
  diag.r_p = 0.3;
  diag.r_s = -0.3;
  const BeamParams b = beam();
  const double a_coef = 0.5 * b.w0 * b.w0 * b.k0 * b.k0;

  const DetectorGeometry g{0.5, 0.25, 1.0};
  const FrameRatios fr = reflected_frame(g, s.a.theta);
  const Oracle o(b, diag, s.a, g, 16);
  const TwoPointCoherence m = o.propagate_two_point(Frame::reflected);

  // zero-phase reference: detectors on the reflected axis
  const DetectorGeometry g0{std::tan(s.a.theta), 0.0, 1.0};
  const Oracle o0(b, diag, s.a, g0, 16);
  const TwoPointCoherence m0 = o0.propagate_two_point(Frame::reflected);

  const double got = std::abs(m.m[1][1]) / std::abs(m0.m[1][1]);
  const double want = std::exp(
      -a_coef * (fr.x_over_z * fr.x_over_z + fr.y_over_z * fr.y_over_z));
  CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("quadrature matches a brute-force oscillatory integral") {
  // independent Riemann-sum evaluation of the two-point matrices, including
  // the full first-order polarization transfer; the transmitted slot pair
  // carries the opposite phase sign
  const Setup s = at(55.0);
  const BeamParams b = beam();
  const DetectorGeometry g{0.4, 0.3, 1.0};
  const Oracle o(b, s.f, s.a, g, 16);

  const double a_coef = 0.5 * b.w0 * b.w0 * b.k0 * b.k0;
  const int n = 1201;
  const double span = 7.0 / std::sqrt(a_coef);
  const double h = 2.0 * span / n;
  const double norm = std::numbers::pi / a_coef;  // integral of the weight

  for (const Frame frame : {Frame::reflected, Frame::transmitted}) {
    const TwoPointCoherence m = o.propagate_two_point(frame);
    const FrameRatios ratios = frame == Frame::reflected
                                   ? reflected_frame(g, s.a.theta)
                                   : transmitted_frame(g, s.a.theta_t);
    const double sign = frame == Frame::reflected ? 1.0 : -1.0;
    const double sx = sign * ratios.x_over_z;
    const double sy = sign * ratios.y_over_z;
    Matrix2c brute{};
    for (int i = 0; i < n; ++i) {
      const double kx = -span + (i + 0.5) * h;
      for (int j = 0; j < n; ++j) {
        const double ky = -span + (j + 0.5) * h;
        const JonesMatrix jm =
            frame == Frame::reflected
                ? jones_reflected_at(s.f, s.a, Complex(kx), Complex(ky))
                : jones_transmitted_at(s.f, s.a, Complex(kx), Complex(ky));
        const double w = std::exp(-a_coef * (kx * kx + ky * ky)) * h * h;
        const Complex phase =
            std::exp(Complex(0.0, 2.0 * a_coef * (kx * sx + ky * sy)));
        for (int p = 0; p < 2; ++p) {
          for (int q = 0; q < 2; ++q) {
            Complex t = 0.0;
            for (int r = 0; r < 2; ++r) t += jm.e[r][p] * jm.e[r][q];
            brute[p][q] += w * phase * t;
          }
        }
      }
    }
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        brute[p][q] /= norm;
        CHECK(std::abs(brute[p][q] - m.m[p][q]) < 1e-8);
      }
    }
  }
}

TEST_CASE("hermiticity and conjugate symmetry") {
  const Setup s = at(60.0);
  const BeamParams b = beam();

  // zero-phase point: Hermitian with non-negative diagonal
  const DetectorGeometry g0{std::tan(s.a.theta), 0.0, 1.0};
  const TwoPointCoherence m0 =
      Oracle(b, s.f, s.a, g0, 16).propagate_two_point(Frame::reflected);
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      CHECK(std::abs(m0.m[p][q] - std::conj(m0.m[q][p])) < 1e-14);
    }
  }
  CHECK(m0.m[0][0].real() >= 0.0);
  CHECK(m0.m[1][1].real() >= 0.0);

  // swapped detector pair conjugate-transposes the matrix
  DetectorGeometry gp = g0, gm = g0;
  gp.dy = 0.3;
  gm.dy = -0.3;
  const TwoPointCoherence ma =
      Oracle(b, s.f, s.a, gp, 16).propagate_two_point(Frame::reflected);
  const TwoPointCoherence mb =
      Oracle(b, s.f, s.a, gm, 16).propagate_two_point(Frame::reflected);
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      CHECK(std::abs(mb.m[p][q] - std::conj(ma.m[q][p])) < 1e-14);
    }
  }
}

TEST_CASE("normalized HV element is odd in the separation") {
  const Setup s = at(60.0);
  const BeamParams b = beam();
  DetectorGeometry gp{0.5, 0.25, 1.0}, gm{0.5, -0.25, 1.0};
  const TwoPointCoherence mp =
      Oracle(b, s.f, s.a, gp, 16).propagate_two_point(Frame::reflected);
  const TwoPointCoherence mm =
      Oracle(b, s.f, s.a, gm, 16).propagate_two_point(Frame::reflected);
  // the ky-linear off-diagonal flips sign with dy once the common
  // x-phase is divided out
  const Complex ratio_p = mp.m[0][1] / mp.m[0][0];
  const Complex ratio_m = mm.m[0][1] / mm.m[0][0];
  CHECK(std::abs(ratio_p + ratio_m) < 1e-12 * std::abs(ratio_p));
}

TEST_CASE("four-point assembly") {
  const Setup s = at(60.0);
  const BeamParams b = beam();
  const DetectorGeometry g{0.5, 0.25, 1.0};
  const Oracle o(b, s.f, s.a, g, 16);
  const auto jr = o.propagate_two_point(Frame::reflected);
  const auto jt = o.propagate_two_point(Frame::transmitted);
  const auto fp = o.assemble_four_point(jr, jt);

  SUBCASE("tensor is direct plus exchange") {
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be)
        for (int ap = 0; ap < 2; ++ap)
          for (int bp = 0; bp < 2; ++bp) {
            CHECK(fp.tensor[al][be][ap][bp] ==
                  fp.direct[al][be][ap][bp] + fp.exchange[al][be][ap][bp]);
          }
  }

  SUBCASE("direct term factorizes over the two beams") {
    CHECK(fp.direct[0][1][1][0] == jr.m[0][1] * jt.m[1][0]);
    CHECK(fp.direct[1][1][0][0] == jr.m[1][1] * jt.m[0][0]);
  }

  SUBCASE("zero cross-coherence reduces the tensor to the direct product") {
    // with zero horizontal separation the odd elements vanish, so the
    // HVHV exchange (two off-diagonal cross factors) must vanish as well
    DetectorGeometry g0 = g;
    g0.dy = 0.0;
    const Oracle oz(b, s.f, s.a, g0, 16);
    const auto fpz = assemble(oz);
    CHECK(std::abs(component(fpz, ComponentLabel::HVHV)) < 1e-14);
  }

  SUBCASE("photon-slot swap leaves the tensor invariant") {
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be)
        for (int ap = 0; ap < 2; ++ap)
          for (int bp = 0; bp < 2; ++bp) {
            CHECK(fp.direct[al][be][ap][bp] ==
                  jt.m[ap][bp] * jr.m[al][be]);
          }
  }

  SUBCASE("argument mismatch errors") {
    CHECK_THROWS_AS(o.assemble_four_point(jr, jr), ArgumentMismatchError);
    DetectorGeometry g2 = g;
    g2.dy = 0.4;
    const Oracle o2(b, s.f, s.a, g2, 16);
    const auto jt2 = o2.propagate_two_point(Frame::transmitted);
    CHECK_THROWS_AS(o.assemble_four_point(jr, jt2), ArgumentMismatchError);
  }
}

TEST_CASE("quadrature doubling changes nothing") {
  const Setup s = at(60.0);
  const BeamParams b = beam();
  const DetectorGeometry g{0.5, 0.25, 1.0};
  const auto fp16 = assemble(Oracle(b, s.f, s.a, g, 16));
  const auto fp32 = assemble(Oracle(b, s.f, s.a, g, 32));
  for (ComponentLabel c : kAllComponents) {
    const double ref = std::max(1e-300, std::abs(component(fp32, c)));
    CHECK(std::abs(component(fp16, c) - component(fp32, c)) / ref < 1e-12);
  }
}

TEST_CASE("envelope product matches the closed form") {
  const Setup s = at(60.0);
  const BeamParams b = beam();
  const DetectorGeometry g{0.5, 0.25, 1.0};
  const Oracle o(b, s.f, s.a, g, 16);
  const FrameRatios fr = reflected_frame(g, s.a.theta);
  const FrameRatios ft = transmitted_frame(g, s.a.theta_t);
  const double prod = o.scalar_envelope(Frame::reflected) *
                      o.scalar_envelope(Frame::transmitted);
  CHECK(prod == doctest::Approx(envelope(b, fr, ft)).epsilon(1e-6));
}

TEST_CASE("normalize_and_compare") {
  std::vector<double> axis{0.2, 0.5, 0.8};
  std::vector<std::array<std::complex<double>, 4>> closed(3), oracle(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (int c = 0; c < 4; ++c) {
      closed[i][c] = std::complex<double>(0.3 + 0.1 * i + 0.05 * c, 0.0);
      oracle[i][c] = 2.0 * closed[i][c];  // pure scale difference
    }
  }

  SUBCASE("self comparison gives zero deviation") {
    const ComparisonReport rep = normalize_and_compare(axis, closed, closed, 1);
    CHECK(rep.max_rel_dev == 0.0);
    for (double s : rep.scale) CHECK(s == doctest::Approx(1.0));
  }

  SUBCASE("a pure scale is calibrated out") {
    const ComparisonReport rep =
        normalize_and_compare(axis, closed, oracle, 1);
    CHECK(rep.max_rel_dev < 1e-14);
    for (double s : rep.scale) CHECK(s == doctest::Approx(0.5));
  }

  SUBCASE("calibration failure on a vanishing reference") {
    closed[1][2] = 0.0;
    CHECK_THROWS_AS(normalize_and_compare(axis, closed, oracle, 1),
                    CalibrationError);
  }

  SUBCASE("size mismatch") {
    axis.pop_back();
    CHECK_THROWS_AS(normalize_and_compare(axis, closed, oracle, 0),
                    ArgumentMismatchError);
  }
}

TEST_CASE("determinism across construction") {
  const Setup s = at(60.0);
  const BeamParams b = beam();
  const DetectorGeometry g{0.5, 0.25, 1.0};
  const auto fp1 = assemble(Oracle(b, s.f, s.a, g, 16));
  const auto fp2 = assemble(Oracle(b, s.f, s.a, g, 16));
  for (ComponentLabel c : kAllComponents) {
    CHECK(component(fp1, c) == component(fp2, c));
  }
}
