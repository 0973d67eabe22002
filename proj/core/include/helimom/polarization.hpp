#pragma once

#include <helimom/identity.hpp>
#include <helimom/vec3.hpp>

namespace helimom {

// The circular basis and the connection built on it are singular where
// |k| + k3 -> 0 (the whole negative k3-axis). Points are accepted when
// (|k| + k3)/|k| >= guard; the default keeps evaluations far from the
// cancellation-dominated neighborhood of the singular ray.
inline constexpr double kDefaultDomainGuard = 1e-3;

// (|k| + k3)/|k|, in [0, 2]. Computed via k_perp^2/(|k|(|k| - k3)) when
// k3 < 0: the direct sum |k| + k3 loses all leading digits near the singular
// ray, while this form is exact up to rounding everywhere off the ray itself.
double guard_ratio(const Vec3& k);

bool in_guarded_domain(const Vec3& k, double guard = kDefaultDomainGuard);

// Validated wave vector. `checked` enforces |k| > 0 and the domain guard;
// `unchecked` skips the guard (still rejecting k = 0 and the exact negative
// axis, where no finite evaluation exists) and is meant for verification
// code that probes finite-difference stencils inside the guard band, where
// the basis is still computed to near machine accuracy.
struct KVec {
  Vec3 k;
  double omega = 0.0;  // |k|; with hbar = c = 1 this is the frequency

  static KVec checked(const Vec3& k, double guard = kDefaultDomainGuard);
  static KVec unchecked(const Vec3& k);
};

// Right-handed orthonormal triad adapted to k: e3 = k/|k|, e1 and e2
// transverse, e1 x e2 = e3.
struct LinearBasis {
  Vec3 e1, e2, e3;
};

// The triad as the rotation carrying +z to k/|k| along the geodesic. With
// u = k/|k| and d = 1 + u3:
//
//   e1 = (1 - u1^2/d, -u1 u2/d, -u1)
//   e2 = (-u1 u2/d, 1 - u2^2/d, -u2)
//   e3 = u
//
// This is algebraically identical to the textbook component formula (divide
// by k_perp) but has no 0/0 on the +z axis — it reproduces the exact limits
// (1,0,0), (0,1,0), (0,0,1) there — and stays orthonormal to rounding for
// any d > 0 because orthonormality holds identically in u. Throws
// std::domain_error for k = 0 and for the exact negative k3-axis, where the
// limit does not exist.
LinearBasis linear_basis(const Vec3& k);

// epsilon(k, i), i in 1..3. Throws std::out_of_range for other i.
Vec3 linear_polarization(const KVec& k, int i);

// e_{+1} = (e1 + i e2)/sqrt(2), e_{-1} = conj(e_{+1}), e_0 = e3.
// lambda must be -1, 0 or +1.
CVec3 circular_polarization(const KVec& k, int lambda);

// Spin-1 generators acting on vector fields: (tau_j)_{kl} = -i eps_{jkl}.
// j in 1..3. Each is Hermitian; [tau_a, tau_b] = i eps_{abc} tau_c.
Mat3c spin_matrix(int j);

// The helicity operator tau . k/|k| as a matrix.
Mat3c helicity_matrix(const Vec3& k);

// (tau . k/|k|) v. The circular vectors are eigenvectors with eigenvalue
// lambda: helicity_apply(k, e_lambda) = lambda e_lambda.
CVec3 helicity_apply(const KVec& k, const CVec3& v);

// Unit-modulus phase -(k1 - i k2)/k_perp attached to e_{+1} by the gauge
// rotation; undefined on the k3-axis (throws std::domain_error there).
Complex gauge_phase(const Vec3& k);

// phase(k) * e_{+1}(k): an equally valid right-circular unit vector in the
// rotated gauge. Requires k1^2 + k2^2 > 0.
CVec3 gauge_rotated_polarization(const KVec& k);

// Residuals for the full set of algebraic basis identities at one k:
// orthonormality and completeness of both bases, the helicity eigenrelation
// for lambda in {-1,0,+1}, e1 x e2 = k/|k|, and the curl relations
// k x e1 = |k| e2, k x e2 = -|k| e1, k x e3 = 0. Every entry is held to
// `tol`.
IdentityReport verify_basis_identities(const KVec& k, double tol);

}  // namespace helimom
