#include <helimom/moments.hpp>

#include <helimom/connection.hpp>

#include <cmath>
#include <stdexcept>

namespace helimom {

namespace {

constexpr Complex kI{0.0, 1.0};

struct RawMoments {
  double M0 = 0.0;
  Vec3 M1{};
  double M2 = 0.0;
  double residual_imag = 0.0;
};

// One quadrature pass. The integrands are evaluated per node in a fixed
// nested-loop order, so the sums are bit-reproducible.
RawMoments accumulate(const GaussianPacket& p, const QuadratureSpec& quad, int nodes,
                      const MomentOptions& opt) {
  const double B = quad.box_half_width_sigmas * p.sigma;
  const MappedAxis ax = mapped_axis(p.center.x, B, nodes);
  const MappedAxis ay = mapped_axis(p.center.y, B, nodes);
  const MappedAxis az = mapped_axis(p.center.z, B, nodes);

  const bool single_mode = opt.derivative_terms == DerivativeTerms::single_mode;

  double M0 = 0.0, M2 = 0.0, M2_im = 0.0;
  Complex M1c[3] = {};

  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      for (int l = 0; l < nodes; ++l) {
        const Vec3 k{ax.x[i], ay.x[j], az.x[l]};
        const double w = ax.w[i] * ay.w[j] * az.w[l];

        AmplitudeSample ap = eval_amplitude(p, k, +1);
        AmplitudeSample am = eval_amplitude(p, k, -1);
        if (single_mode) {
          ap.gradient = am.gradient = CVec3{};
          ap.laplacian = am.laplacian = Complex{};
        }

        Vec3 A = berry_connection_raw(k);

        if (opt.gauge_rotated) {
          // a1 -> e^{-i theta} a1, a-1 -> e^{+i theta} a-1, A -> A + grad
          // theta. The phase exp(i theta) = gauge_phase(k) is smooth off the
          // k3-axis and theta is harmonic, so the derivative samples rotate
          // by the product rule with no grad^2-theta term.
          const double kperp2 = k.x * k.x + k.y * k.y;
          if (kperp2 == 0.0)
            throw std::domain_error(
                "kspace_moments: gauge-rotated run hit a node on the k3-axis; "
                "use an even node count or an off-axis box");
          const Complex ph = gauge_phase(k);       // e^{+i theta}
          const Complex phc = std::conj(ph);       // e^{-i theta}
          const Vec3 gtheta = gauge_theta_gradient(k);
          const CVec3 gt{gtheta.x, gtheta.y, 0.0};
          const double gt2 = norm2(gtheta);

          const AmplitudeSample a0 = ap;
          ap.value = phc * a0.value;
          ap.gradient = phc * (a0.gradient - kI * a0.value * gt);
          ap.laplacian = phc * (a0.laplacian -
                                2.0 * kI * (gt.x * a0.gradient.x + gt.y * a0.gradient.y) -
                                gt2 * a0.value);
          const AmplitudeSample b0 = am;
          am.value = ph * b0.value;
          am.gradient = ph * (b0.gradient + kI * b0.value * gt);
          am.laplacian = ph * (b0.laplacian +
                               2.0 * kI * (gt.x * b0.gradient.x + gt.y * b0.gradient.y) -
                               gt2 * b0.value);
          A += gtheta;
        }

        const double d2 = std::norm(ap.value) + std::norm(am.value);
        M0 += w * d2;

        // M1 = -i integral [ a1 (grad - iA) a1* - a-1* (grad - iA) a-1 ]
        for (int m = 0; m < 3; ++m) {
          const Complex t1 =
              ap.value * (std::conj(ap.gradient[m]) - kI * A[m] * std::conj(ap.value));
          const Complex t2 = std::conj(am.value) * (am.gradient[m] - kI * A[m] * am.value);
          M1c[m] += w * (-kI) * (t1 - t2);
        }

        // M2 = integral { d2/|k|^2 - [a1 D^2 a1* + a-1* D^2 a-1] } with the
        // covariant Laplacian expanded using div A = 0:
        //   a1 D^2 a1* = a1 lap a1* - 2i (A . grad a1*) a1 - |A|^2 |a1|^2
        //   a-1* D^2 a-1 = a-1* lap a-1 - 2i (A . grad a-1) a-1* - |A|^2 |a-1|^2
        const double A2 = norm2(A);
        const Complex AdGp = A.x * std::conj(ap.gradient.x) + A.y * std::conj(ap.gradient.y) +
                             A.z * std::conj(ap.gradient.z);
        const Complex AdGm =
            A.x * am.gradient.x + A.y * am.gradient.y + A.z * am.gradient.z;
        const Complex T1 =
            ap.value * std::conj(ap.laplacian) - 2.0 * kI * AdGp * ap.value -
            A2 * std::norm(ap.value);
        const Complex T2 =
            std::conj(am.value) * am.laplacian - 2.0 * kI * AdGm * std::conj(am.value) -
            A2 * std::norm(am.value);
        const Complex contrib = d2 / norm2(k) - (T1 + T2);
        M2 += w * contrib.real();
        M2_im += w * contrib.imag();
      }

  RawMoments r;
  r.M0 = M0;
  r.M1 = {M1c[0].real(), M1c[1].real(), M1c[2].real()};
  r.M2 = M2;
  r.residual_imag = std::abs(M2_im);
  for (const auto& c : M1c) r.residual_imag = std::max(r.residual_imag, std::abs(c.imag()));
  return r;
}

}  // namespace

MomentReport kspace_moments(const GaussianPacket& p, const QuadratureSpec& quad,
                            const MomentOptions& opt) {
  p.validate();
  if (quad.nodes_per_axis < 8)
    throw std::invalid_argument("kspace_moments: need at least 8 nodes per axis");
  if (coverage_deficit(p, quad) > 1e-6)
    throw std::runtime_error("kspace_moments: quadrature box clips the packet");
  if (min_guard_ratio(p, quad) < kDefaultDomainGuard)
    throw std::runtime_error("kspace_moments: packet support leaves the guarded k-domain");

  const RawMoments fine = accumulate(p, quad, quad.nodes_per_axis, opt);
  const int coarse_nodes = std::max(8, (3 * quad.nodes_per_axis) / 4);
  const RawMoments coarse = accumulate(p, quad, coarse_nodes, opt);

  MomentReport rep;
  rep.M0 = fine.M0;
  rep.M1 = fine.M1;
  rep.M2 = fine.M2;
  rep.residual_imag = fine.residual_imag;
  rep.convergence_delta = std::abs(fine.M2 - coarse.M2);
  rep.r_mean = fine.M1 / fine.M0;
  rep.r2_mean = fine.M2 / fine.M0;
  const double dr2 = rep.r2_mean - norm2(rep.r_mean);
  rep.delta_r = dr2 > 0.0 ? std::sqrt(dr2) : 0.0;
  return rep;
}

double moment0(const GaussianPacket& p, const QuadratureSpec& quad) {
  return kspace_moments(p, quad).M0;
}

Vec3 moment1(const GaussianPacket& p, const QuadratureSpec& quad) {
  return kspace_moments(p, quad).M1;
}

double moment2(const GaussianPacket& p, const QuadratureSpec& quad) {
  return kspace_moments(p, quad).M2;
}

MomentReport uncertainty(const GaussianPacket& p, const QuadratureSpec& quad,
                         double tol_imag_rel) {
  const MomentReport rep = kspace_moments(p, quad);
  if (!(rep.M0 > 0.0)) throw std::runtime_error("uncertainty: M0 must be positive");
  if (rep.residual_imag > tol_imag_rel * rep.M0)
    throw std::runtime_error("uncertainty: imaginary residual " +
                             std::to_string(rep.residual_imag) + " exceeds tolerance");
  if (rep.M2 < -tol_imag_rel * rep.M0)
    throw std::runtime_error("uncertainty: M2 negative beyond rounding");
  const double dr2 = rep.r2_mean - norm2(rep.r_mean);
  if (dr2 < -1e-12 * (std::abs(rep.r2_mean) + 1.0))
    throw std::runtime_error("uncertainty: (delta_r)^2 negative beyond rounding");
  return rep;
}

}  // namespace helimom
