#pragma once

#include <helimom/identity.hpp>
#include <helimom/polarization.hpp>
#include <helimom/vec3.hpp>

namespace helimom {

// Momentum-space connection of the circular basis and the associated scalar,
// in closed form:
//
//   A(k) = (-k2, k1, 0) / (|k| (|k| + k3))      A = i [d e_{+1}^dag / dk] e_{+1}
//   L(k) = -2 / (|k| (|k| + k3))                L = [d^2 e_{+1}^dag / dk^2] e_{+1}
//
// Both carry the same singular denominator as the basis itself and share its
// domain guard. They satisfy L + |A|^2 = -1/|k|^2 identically and div A = 0.
struct ConnectionSample {
  Vec3 A;     // units: length
  double L;   // units: length^2, always negative
};

Vec3 berry_connection(const KVec& k);
double connection_scalar(const KVec& k);
ConnectionSample connection_eval(const KVec& k);

// Raw closed-form evaluators for pre-validated points (quadrature inner
// loops validate the whole box once instead of every node).
Vec3 berry_connection_raw(const Vec3& k);
double connection_scalar_raw(const Vec3& k);

// Gauge data for the rotated basis e -> exp(i theta) e with the unit-modulus
// phase of gauge_phase(): theta = pi - atan2(k2, k1) up to branch, of which
// only the gradient matters. grad theta = (k2, -k1, 0)/k_perp^2, and theta is
// harmonic away from the k3-axis (its Laplacian vanishes), which the gauge-
// transformed moment formulas rely on. Undefined on the axis (throws).
Vec3 gauge_theta_gradient(const Vec3& k);

// Finite-difference verification of the derivative identities at one k.
// Central differences with step h; the second derivative sum uses the
// standard 7-point Laplacian stencil. Checks, for both lambda = +1 and -1:
//
//   e_lambda^dag(-k) e_lambda(k) = 0              (algebraic, held to 1e-12)
//   [d/dk e_lambda^dag(-k)] e_lambda(k) = 0       (central differences)
//   [d^2/dk^2 e_lambda^dag(-k)] e_lambda(k) = 0   (7-point stencil)
//
// plus the closed forms against their derivative definitions:
//
//   A vs i [d e_{+1}^dag/dk] e_{+1},  L vs [d^2 e_{+1}^dag/dk^2] e_{+1},
//   div A = 0 (differencing the closed form), L + |A|^2 = -1/|k|^2 (closed).
//
// The three cross-term rows appear only when -k sits inside the guarded
// domain with enough margin for the stencil; for k near the +3-axis they are
// omitted (there -k approaches the singular ray and the identity has no
// guarded operand). On the +3-axis itself the whole probe point is first
// displaced by h in the +x direction — the identities hold at every off-axis
// point, so the displaced point is an equally valid probe.
//
// Tolerances: algebraic rows are absolute (1e-12); finite-difference rows
// are tol_fd times one plus the natural scale of the quantity differenced
// (|A|, |L|, inverse powers of |k|). Those scaled tolerances are calibrated
// for probes with |k| in roughly [0.5, 4] and direction cosine u3 in
// [-0.9, 0.9]; closer to the guard boundary or at extreme magnitudes the
// truncation and rounding terms of the stencil outgrow them, and a row can
// fail even though the identity itself is exact. The randomized suites
// sample this calibrated band. Requires |k| > 2h (throws otherwise).
IdentityReport verify_connection_identities(const KVec& k, double h, double tol_fd);

// Default finite-difference step used by the verification suites:
// h = h_rel * max(1, |k|) keeps the O(h^2) truncation and the 1/h rounding
// amplification balanced across magnitudes.
inline double fd_step(const Vec3& k, double h_rel = 1e-4) {
  const double kn = norm(k);
  return h_rel * (kn > 1.0 ? kn : 1.0);
}

}  // namespace helimom
