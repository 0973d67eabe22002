#include <helimom/realspace.hpp>

#include <helimom/polarization.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace helimom {

namespace {

const double kSynthPrefactor = std::pow(2.0 * M_PI, -1.5);

struct KAxes {
  MappedAxis x, y, z;
  int n;
};

KAxes k_axes(const GaussianPacket& p, const QuadratureSpec& kquad) {
  const double B = kquad.box_half_width_sigmas * p.sigma;
  return {mapped_axis(p.center.x, B, kquad.nodes_per_axis),
          mapped_axis(p.center.y, B, kquad.nodes_per_axis),
          mapped_axis(p.center.z, B, kquad.nodes_per_axis), kquad.nodes_per_axis};
}

void check_kdomain(const GaussianPacket& p, const QuadratureSpec& kquad) {
  p.validate();
  if (coverage_deficit(p, kquad) > 1e-6)
    throw std::runtime_error("realspace: k-quadrature box clips the packet");
  if (min_guard_ratio(p, kquad) < kDefaultDomainGuard)
    throw std::runtime_error("realspace: packet support leaves the guarded k-domain");
}

}  // namespace

FieldSample synthesize_field(const GaussianPacket& p, const QuadratureSpec& kquad,
                             const Vec3& r) {
  check_kdomain(p, kquad);
  const KAxes ax = k_axes(p, kquad);

  CVec3 fp{}, fm{};
  for (int i = 0; i < ax.n; ++i)
    for (int j = 0; j < ax.n; ++j)
      for (int l = 0; l < ax.n; ++l) {
        const Vec3 k{ax.x.x[i], ax.y.x[j], ax.z.x[l]};
        const double w = ax.x.w[i] * ax.y.w[j] * ax.z.w[l];
        const LinearBasis b = linear_basis(k);
        const CVec3 ep = (CVec3(b.e1) + Complex(0.0, 1.0) * CVec3(b.e2)) * std::sqrt(0.5);

        const Complex a_p = amplitude_value(p, k, +1);
        const Complex a_m = amplitude_value(p, k, -1);
        const Complex eikr = std::exp(Complex(0.0, dot(k, r)));

        // F^(+1) rides e_{+1} for both frequency signs; F^(-1) rides e_{-1}.
        const Complex cp = w * (a_p * eikr + std::conj(a_m) * std::conj(eikr));
        const Complex cm = w * (a_m * eikr + std::conj(a_p) * std::conj(eikr));
        fp += cp * ep;
        fm += cm * conj(ep);
      }

  return {kSynthPrefactor * fp, kSynthPrefactor * fm};
}

RealspaceMoments realspace_moments(const GaussianPacket& p, const QuadratureSpec& kquad,
                                   const SpatialGrid& grid) {
  check_kdomain(p, kquad);
  if (grid.nodes_per_axis < 8)
    throw std::invalid_argument("realspace_moments: need at least 8 spatial nodes per axis");

  const KAxes kax = k_axes(p, kquad);
  const int nk = kax.n;

  const double H = grid.resolved_half_width(p);
  const int nr = grid.nodes_per_axis;
  const MappedAxis rx = mapped_axis(p.r0.x, H, nr);
  const MappedAxis ry = mapped_axis(p.r0.y, H, nr);
  const MappedAxis rz = mapped_axis(p.r0.z, H, nr);

  // Envelope tail outside the cube: |F|^2 has per-axis std 1/(2 sigma)
  // around r0, so the inside mass is erf(sqrt(2) sigma H) per axis.
  const double inside = std::erf(std::sqrt(2.0) * p.sigma * H);
  const double tail = 1.0 - inside * inside * inside;
  if (tail > 1e-4)
    throw std::runtime_error("realspace_moments: spatial cube would leak " +
                             std::to_string(tail) + " of the field energy");

  // Per-k-node coefficient vectors: Vp goes with e^{+ik.r}, Vm with
  // e^{-ik.r}. Both carry e_{+1}(k); only |F^(1)|^2 is integrated.
  const int nk3 = nk * nk * nk;
  std::vector<CVec3> Vp(nk3), Vm(nk3);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j)
      for (int l = 0; l < nk; ++l) {
        const Vec3 k{kax.x.x[i], kax.y.x[j], kax.z.x[l]};
        const double w = kax.x.w[i] * kax.y.w[j] * kax.z.w[l] * kSynthPrefactor;
        const LinearBasis b = linear_basis(k);
        const CVec3 ep = (CVec3(b.e1) + Complex(0.0, 1.0) * CVec3(b.e2)) * std::sqrt(0.5);
        const int idx = (i * nk + j) * nk + l;
        Vp[idx] = (w * amplitude_value(p, k, +1)) * ep;
        Vm[idx] = (w * std::conj(amplitude_value(p, k, -1))) * ep;
      }

  // Phase tables per axis: P[a][i] = exp(+i k_a x_i) (minus-term tables are
  // the conjugates).
  const auto phase_table = [](const MappedAxis& ka, const MappedAxis& ra) {
    std::vector<Complex> t(ka.x.size() * ra.x.size());
    for (size_t a = 0; a < ka.x.size(); ++a)
      for (size_t i = 0; i < ra.x.size(); ++i)
        t[a * ra.x.size() + i] = std::exp(Complex(0.0, ka.x[a] * ra.x[i]));
    return t;
  };
  const std::vector<Complex> Px = phase_table(kax.x, rx);
  const std::vector<Complex> Py = phase_table(kax.y, ry);
  const std::vector<Complex> Pz = phase_table(kax.z, rz);

  // Contraction 1 over k1: G1[ix][j][l] = sum_i V[i][j][l] P(k1_i, x_ix).
  // Contraction 2 over k2: G2[ix][iy][l] = sum_j G1[ix][j][l] P(k2_j, y_iy).
  // Plus-term tables enter directly, minus-term tables conjugated.
  const auto contract12 = [&](const std::vector<CVec3>& V, bool conjugate) {
    std::vector<CVec3> G1(static_cast<size_t>(nr) * nk * nk);
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j)
        for (int l = 0; l < nk; ++l) {
          const CVec3& v = V[(i * nk + j) * nk + l];
          for (int ix = 0; ix < nr; ++ix) {
            const Complex ph = conjugate ? std::conj(Px[i * nr + ix]) : Px[i * nr + ix];
            G1[(static_cast<size_t>(ix) * nk + j) * nk + l] += ph * v;
          }
        }
    std::vector<CVec3> G2(static_cast<size_t>(nr) * nr * nk);
    for (int ix = 0; ix < nr; ++ix)
      for (int j = 0; j < nk; ++j)
        for (int l = 0; l < nk; ++l) {
          const CVec3& v = G1[(static_cast<size_t>(ix) * nk + j) * nk + l];
          for (int iy = 0; iy < nr; ++iy) {
            const Complex ph = conjugate ? std::conj(Py[j * nr + iy]) : Py[j * nr + iy];
            G2[(static_cast<size_t>(ix) * nr + iy) * nk + l] += ph * v;
          }
        }
    return G2;
  };
  const std::vector<CVec3> G2p = contract12(Vp, false);
  const std::vector<CVec3> G2m = contract12(Vm, true);

  // Final contraction over k3 plus moment accumulation, one x-slab per task.
  // Each slab writes only its own partial sums; the reduction below runs in
  // slab order, so the result does not depend on the thread schedule.
  struct Partial {
    double M0 = 0.0, M2 = 0.0;
    Vec3 M1{};
  };
  std::vector<Partial> parts(nr);

  parallel_for_index(nr, [&](int ix) {
    Partial acc;
    std::vector<CVec3> row(nr);  // F over z for one (x, y) line
    for (int iy = 0; iy < nr; ++iy) {
      for (int iz = 0; iz < nr; ++iz) row[iz] = CVec3{};
      const size_t base = (static_cast<size_t>(ix) * nr + iy) * nk;
      for (int l = 0; l < nk; ++l) {
        const CVec3& vp = G2p[base + l];
        const CVec3& vm = G2m[base + l];
        for (int iz = 0; iz < nr; ++iz) {
          const Complex ph = Pz[l * nr + iz];
          row[iz] += ph * vp + std::conj(ph) * vm;
        }
      }
      for (int iz = 0; iz < nr; ++iz) {
        const double w = rx.w[ix] * ry.w[iy] * rz.w[iz];
        const double dens = norm2(row[iz]);
        const Vec3 r{rx.x[ix], ry.x[iy], rz.x[iz]};
        acc.M0 += w * dens;
        acc.M1 += (w * dens) * r;
        acc.M2 += w * dens * norm2(r);
      }
    }
    parts[ix] = acc;
  });

  RealspaceMoments out;
  out.tail_fraction = tail;
  for (int ix = 0; ix < nr; ++ix) {
    out.M0 += parts[ix].M0;
    out.M1 += parts[ix].M1;
    out.M2 += parts[ix].M2;
  }
  out.r2_mean = out.M2 / out.M0;
  const Vec3 rmean = out.M1 / out.M0;
  const double dr2 = out.r2_mean - norm2(rmean);
  out.delta_r = dr2 > 0.0 ? std::sqrt(dr2) : 0.0;
  return out;
}

ComparisonReport cross_check(const GaussianPacket& p, const QuadratureSpec& kquad,
                             const SpatialGrid& grid, double tol_rel) {
  ComparisonReport rep;
  rep.tol_rel = tol_rel;
  rep.kspace = kspace_moments(p, kquad);
  rep.realspace = realspace_moments(p, kquad, grid);

  rep.rel_M0 = std::abs(rep.realspace.M0 - rep.kspace.M0) / std::abs(rep.kspace.M0);
  const double m1_scale =
      std::max(norm(rep.kspace.M1), rep.kspace.delta_r * rep.kspace.M0);
  rep.rel_M1 = norm(rep.realspace.M1 - rep.kspace.M1) / m1_scale;
  rep.rel_M2 = std::abs(rep.realspace.M2 - rep.kspace.M2) / std::abs(rep.kspace.M2);
  rep.rel_delta_r =
      std::abs(rep.realspace.delta_r - rep.kspace.delta_r) / rep.kspace.delta_r;
  rep.pass = rep.rel_M0 <= tol_rel && rep.rel_M1 <= tol_rel && rep.rel_M2 <= tol_rel &&
             rep.rel_delta_r <= tol_rel;
  return rep;
}

}  // namespace helimom
