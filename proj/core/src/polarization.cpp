#include <helimom/polarization.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace helimom {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kSqrtHalf = std::sqrt(0.5);

[[noreturn]] void reject(const std::string& what) { throw std::domain_error(what); }

}  // namespace

double guard_ratio(const Vec3& k) {
  const double kn = norm(k);
  if (kn == 0.0) return 0.0;
  if (k.z >= 0.0) return (kn + k.z) / kn;
  // k3 < 0: |k| + k3 = k_perp^2 / (|k| - k3), which avoids the cancellation.
  const double kperp2 = k.x * k.x + k.y * k.y;
  return kperp2 / (kn * (kn - k.z));
}

bool in_guarded_domain(const Vec3& k, double guard) {
  const double kn = norm(k);
  return kn > 0.0 && std::isfinite(kn) && guard_ratio(k) >= guard;
}

KVec KVec::checked(const Vec3& k, double guard) {
  const double kn = norm(k);
  if (!(kn > 0.0) || !std::isfinite(kn)) reject("KVec: |k| must be positive and finite");
  if (guard_ratio(k) < guard)
    reject("KVec: (|k|+k3)/|k| = " + std::to_string(guard_ratio(k)) +
           " below domain guard " + std::to_string(guard));
  return {k, kn};
}

KVec KVec::unchecked(const Vec3& k) {
  const double kn = norm(k);
  if (!(kn > 0.0) || !std::isfinite(kn)) reject("KVec: |k| must be positive and finite");
  if (k.x == 0.0 && k.y == 0.0 && k.z < 0.0)
    reject("KVec: the negative k3-axis has no polarization limit");
  return {k, kn};
}

LinearBasis linear_basis(const Vec3& k) {
  const double kn = norm(k);
  if (!(kn > 0.0) || !std::isfinite(kn)) reject("linear_basis: |k| must be positive and finite");

  const Vec3 u = k / kn;
  if (u.x == 0.0 && u.y == 0.0) {
    if (u.z < 0.0) reject("linear_basis: the negative k3-axis has no limit");
    // Exact +z-axis limit.
    return {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  }

  // d = 1 + u3 via the stable ratio (see guard_ratio): for u3 < 0 the direct
  // sum would lose the digits that the transverse components then divide by.
  const double d = guard_ratio(k);
  const Vec3 e1{1.0 - u.x * u.x / d, -u.x * u.y / d, -u.x};
  const Vec3 e2{-u.x * u.y / d, 1.0 - u.y * u.y / d, -u.y};
  return {e1, e2, u};
}

Vec3 linear_polarization(const KVec& k, int i) {
  const LinearBasis b = linear_basis(k.k);
  switch (i) {
    case 1: return b.e1;
    case 2: return b.e2;
    case 3: return b.e3;
    default: throw std::out_of_range("linear_polarization: i must be 1, 2 or 3");
  }
}

CVec3 circular_polarization(const KVec& k, int lambda) {
  const LinearBasis b = linear_basis(k.k);
  switch (lambda) {
    case +1: return (CVec3(b.e1) + kI * CVec3(b.e2)) * kSqrtHalf;
    case -1: return (CVec3(b.e1) - kI * CVec3(b.e2)) * kSqrtHalf;
    case 0: return CVec3(b.e3);
    default: throw std::out_of_range("circular_polarization: lambda must be -1, 0 or +1");
  }
}

Mat3c spin_matrix(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("spin_matrix: j must be 1, 2 or 3");
  Mat3c t;
  // (tau_j)_{kl} = -i eps_{jkl}
  const int a = j % 3;        // 0-based index following j
  const int b = (j + 1) % 3;  // 0-based index following a
  t.m[a][b] = -kI;
  t.m[b][a] = kI;
  return t;
}

Mat3c helicity_matrix(const Vec3& k) {
  const double kn = norm(k);
  if (!(kn > 0.0) || !std::isfinite(kn)) reject("helicity_matrix: |k| must be positive and finite");
  const Vec3 u = k / kn;
  return spin_matrix(1) * Complex(u.x) + spin_matrix(2) * Complex(u.y) +
         spin_matrix(3) * Complex(u.z);
}

CVec3 helicity_apply(const KVec& k, const CVec3& v) { return helicity_matrix(k.k) * v; }

Complex gauge_phase(const Vec3& k) {
  const double kperp = std::hypot(k.x, k.y);
  if (kperp == 0.0) reject("gauge_phase: undefined on the k3-axis (k1 = k2 = 0)");
  return -Complex(k.x, -k.y) / kperp;
}

CVec3 gauge_rotated_polarization(const KVec& k) {
  return gauge_phase(k.k) * circular_polarization(k, +1);
}

IdentityReport verify_basis_identities(const KVec& k, double tol) {
  IdentityReport rep;
  const LinearBasis b = linear_basis(k.k);
  const CVec3 ep = circular_polarization(k, +1);
  const CVec3 em = circular_polarization(k, -1);
  const CVec3 e0 = circular_polarization(k, 0);

  // Linear orthonormality: eps_i . eps_j = delta_ij.
  {
    const Vec3 e[3] = {b.e1, b.e2, b.e3};
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r = std::max(r, std::abs(dot(e[i], e[j]) - (i == j ? 1.0 : 0.0)));
    rep.add("linear orthonormality", r, tol);

    // Completeness: sum_i eps_i eps_i^T = identity.
    double c = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int bb = 0; bb < 3; ++bb) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) s += e[i][a] * e[i][bb];
        c = std::max(c, std::abs(s - (a == bb ? 1.0 : 0.0)));
      }
    rep.add("linear completeness", c, tol);
  }

  // Circular orthonormality: e_l^dag e_m = delta_lm, and conjugation pairing.
  {
    const CVec3 e[3] = {ep, e0, em};
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r = std::max(r, std::abs(cdot(e[i], e[j]) - Complex(i == j ? 1.0 : 0.0)));
    rep.add("circular orthonormality", r, tol);

    double c = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int bb = 0; bb < 3; ++bb) {
        Complex s = 0.0;
        for (int i = 0; i < 3; ++i) s += e[i][a] * std::conj(e[i][bb]);
        c = std::max(c, std::abs(s - Complex(a == bb ? 1.0 : 0.0)));
      }
    rep.add("circular completeness", c, tol);

    const CVec3 d = em - conj(ep);
    rep.add("e_minus = conj(e_plus)", norm(d), tol);
  }

  // Helicity eigenrelation for all three eigenvalues.
  {
    const Mat3c h = helicity_matrix(k.k);
    rep.add("helicity e_plus", norm(h * ep - Complex(+1.0) * ep), tol);
    rep.add("helicity e_zero", norm(h * e0), tol);
    rep.add("helicity e_minus", norm(h * em - Complex(-1.0) * em), tol);
  }

  // Triad handedness and the curl relations.
  {
    rep.add("e1 x e2 = k/|k|", norm(cross(b.e1, b.e2) - b.e3), tol);
    rep.add("k x e1 = |k| e2", norm(cross(k.k, b.e1) - k.omega * b.e2), tol * k.omega);
    rep.add("k x e2 = -|k| e1", norm(cross(k.k, b.e2) + k.omega * b.e1), tol * k.omega);
    rep.add("k x e3 = 0", norm(cross(k.k, b.e3)), tol * k.omega);
  }

  return rep;
}

}  // namespace helimom
