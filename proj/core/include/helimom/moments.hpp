#pragma once

#include <helimom/amplitudes.hpp>
#include <helimom/quadrature.hpp>
#include <helimom/vec3.hpp>

namespace helimom {

// Which derivative terms enter the covariant-derivative moment formulas.
//
// `full` is the honest evaluation: analytic amplitude gradient and Laplacian
// plus the connection terms. `single_mode` drops the amplitude derivatives
// (gradient and Laplacian set to zero), which is the idealization behind the
// narrow-packet limits <r> -> -A(k0), <r^2> -> -L(k0), delta_r -> 1/|k0|:
// for any normalizable packet the envelope's own gradient adds 3/(4 sigma^2)
// to M2, which diverges as the packet narrows, so the limits are statements
// about the single-mode idealization, not about the full moments.
enum class DerivativeTerms { full, single_mode };

struct MomentOptions {
  DerivativeTerms derivative_terms = DerivativeTerms::full;
  // Evaluate in the rotated gauge (basis phase of gauge_phase(), amplitudes
  // counter-rotated, connection shifted by grad theta). Physics is gauge
  // invariant, so the report must match the unrotated one to rounding; this
  // switch exists so tests can actually check that. Requires every
  // quadrature node off the k3-axis (even node counts with the default
  // centered box satisfy this).
  bool gauge_rotated = false;
};

// Moments of the energy density computed in k-space:
//
//   M0 = integral (|a1|^2 + |a-1|^2)
//   M1 = -i integral [ a1 (D a1)* ... ] with D = d/dk - iA   (see moment1)
//   M2 = integral { (|a1|^2 + |a-1|^2)/|k|^2 - [a1 D^2 a1* + a-1* D^2 a-1] }
//
// r_mean = M1/M0, r2_mean = M2/M0, delta_r^2 = r2_mean - |r_mean|^2.
// residual_imag is the largest |imaginary part| discarded from the nominally
// real accumulations (M1 components and M2); it should sit at rounding level,
// bounded by ~1e-10 * M0. convergence_delta = |M2(n) - M2(3n/4)| from a
// coarser companion run.
struct MomentReport {
  double M0 = 0.0;
  Vec3 M1{};
  double M2 = 0.0;
  Vec3 r_mean{};
  double r2_mean = 0.0;
  double delta_r = 0.0;
  double residual_imag = 0.0;
  double convergence_delta = 0.0;
};

MomentReport kspace_moments(const GaussianPacket& p, const QuadratureSpec& quad,
                            const MomentOptions& opt = {});

// Single-quantity convenience wrappers (full derivative terms, unrotated gauge).
double moment0(const GaussianPacket& p, const QuadratureSpec& quad);
Vec3 moment1(const GaussianPacket& p, const QuadratureSpec& quad);
double moment2(const GaussianPacket& p, const QuadratureSpec& quad);

// kspace_moments plus the structural checks: M0 > 0, M2 >= 0 up to rounding,
// residual_imag <= tol_imag_rel * M0, and (delta_r)^2 not negative beyond
// rounding. Violations throw std::runtime_error naming the failed check.
MomentReport uncertainty(const GaussianPacket& p, const QuadratureSpec& quad,
                         double tol_imag_rel = 1e-10);

}  // namespace helimom
