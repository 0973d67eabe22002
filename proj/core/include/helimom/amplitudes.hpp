#pragma once

#include <helimom/polarization.hpp>
#include <helimom/quadrature.hpp>
#include <helimom/vec3.hpp>

namespace helimom {

// Two-helicity Gaussian amplitude family
//
//   a_lambda(k) = c_lambda * N * exp(-|k - k0|^2 / (4 sigma^2)) * exp(-i k . r0)
//
// The linear phase displaces the synthesized field by +r0 (the packet's
// annihilation amplitude rides exp(+i k . r), so exp(-i k . r0) turns every
// exp(+i k . r) into exp(+i k . (r - r0))); with r0 = 0 the packet is
// centered at the origin. With `normalize` set, N makes
// integral d3k (|a_{+1}|^2 + |a_{-1}|^2) = 1; otherwise N = 1.
struct GaussianPacket {
  Vec3 center;                 // k0
  double sigma = 0.0;          // isotropic width in k, > 0
  Complex weight_plus{0.0};    // c_{+1}
  Complex weight_minus{0.0};   // c_{-1}
  Vec3 r0{};                   // spatial displacement via the linear phase
  bool normalize = true;

  double norm_constant() const;  // N
  void validate() const;         // throws std::invalid_argument on bad fields
};

// Value and analytic first/second derivatives at one k. With
// g = -(k - k0)/(2 sigma^2) - i r0 (the logarithmic gradient):
// gradient = value * g, laplacian = value * (g . g - 3/(2 sigma^2)).
struct AmplitudeSample {
  Complex value{};
  CVec3 gradient{};
  Complex laplacian{};
};

AmplitudeSample eval_amplitude(const GaussianPacket& p, const Vec3& k, int lambda);

// Just the value (cheap path for field synthesis).
Complex amplitude_value(const GaussianPacket& p, const Vec3& k, int lambda);

// Quadrature evaluation of integral d3k (|a_{+1}|^2 + |a_{-1}|^2) over the
// configured box. Throws std::runtime_error if the box clips more than
// `max_clipped_mass` of the closed-form Gaussian mass, or if any corner of
// the effective support leaves the guarded k-domain.
double norm_squared(const GaussianPacket& p, const QuadratureSpec& quad,
                    double max_clipped_mass = 1e-6);

// Closed-form fraction of the packet's |a|^2 mass outside the quadrature
// box (product of per-axis Gaussian tails).
double coverage_deficit(const GaussianPacket& p, const QuadratureSpec& quad);

// Smallest (|k|+k3)/|k| over the quadrature box. The minimum of
// k3 + (1-delta)|k| over a box sits at minimal k3 and minimal k_perp, which
// gives a closed-form worst point; used to enforce the domain guard over the
// whole effective support.
double min_guard_ratio(const GaussianPacket& p, const QuadratureSpec& quad);

}  // namespace helimom
