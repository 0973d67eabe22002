#include <helimom/amplitudes.hpp>

#include <cmath>
#include <stdexcept>

namespace helimom {

namespace {

double weight2(const GaussianPacket& p) {
  return std::norm(p.weight_plus) + std::norm(p.weight_minus);
}

}  // namespace

void GaussianPacket::validate() const {
  if (!(sigma > 0.0)) throw std::invalid_argument("GaussianPacket: sigma must be > 0");
  if (normalize && weight2(*this) == 0.0)
    throw std::invalid_argument("GaussianPacket: cannot normalize a zero packet");
}

double GaussianPacket::norm_constant() const {
  validate();
  if (!normalize) return 1.0;
  // integral of exp(-q^2/(2 sigma^2)) over R^3 is (2 pi sigma^2)^{3/2}
  return std::pow(2.0 * M_PI * sigma * sigma, -0.75) / std::sqrt(weight2(*this));
}

AmplitudeSample eval_amplitude(const GaussianPacket& p, const Vec3& k, int lambda) {
  if (lambda != 1 && lambda != -1)
    throw std::out_of_range("eval_amplitude: lambda must be +1 or -1");
  const Complex c = lambda > 0 ? p.weight_plus : p.weight_minus;
  const Vec3 q = k - p.center;
  const double inv2s2 = 1.0 / (2.0 * p.sigma * p.sigma);

  const Complex value = c * p.norm_constant() *
                        std::exp(Complex(-0.5 * norm2(q) * inv2s2, -dot(k, p.r0)));

  const CVec3 g{Complex(-q.x * inv2s2, -p.r0.x), Complex(-q.y * inv2s2, -p.r0.y),
                Complex(-q.z * inv2s2, -p.r0.z)};
  const Complex gg = g.x * g.x + g.y * g.y + g.z * g.z;

  return {value, value * g, value * (gg - 3.0 * inv2s2)};
}

Complex amplitude_value(const GaussianPacket& p, const Vec3& k, int lambda) {
  if (lambda != 1 && lambda != -1)
    throw std::out_of_range("amplitude_value: lambda must be +1 or -1");
  const Complex c = lambda > 0 ? p.weight_plus : p.weight_minus;
  const Vec3 q = k - p.center;
  const double inv2s2 = 1.0 / (2.0 * p.sigma * p.sigma);
  return c * p.norm_constant() * std::exp(Complex(-0.5 * norm2(q) * inv2s2, -dot(k, p.r0)));
}

double coverage_deficit(const GaussianPacket& p, const QuadratureSpec& quad) {
  p.validate();
  // per-axis mass inside [k0 - B, k0 + B] for the |a|^2 Gaussian (std sigma)
  const double inside = std::erf(quad.box_half_width_sigmas / std::sqrt(2.0));
  return 1.0 - inside * inside * inside;
}

double min_guard_ratio(const GaussianPacket& p, const QuadratureSpec& quad) {
  p.validate();
  const double B = quad.box_half_width_sigmas * p.sigma;
  const double k3min = p.center.z - B;
  const auto clamp0 = [](double v) { return v > 0.0 ? v : 0.0; };
  const double perp_min = std::hypot(clamp0(std::abs(p.center.x) - B),
                                     clamp0(std::abs(p.center.y) - B));
  if (perp_min == 0.0 && k3min <= 0.0 && p.center.z + B >= 0.0)
    return 0.0;  // the box meets the k3 <= 0 part of the axis (or the origin)
  if (k3min >= 0.0) {
    // ratio >= 1 everywhere; its minimum sits at the largest-|k_perp| corner
    const double perp_max = std::hypot(std::abs(p.center.x) + B, std::abs(p.center.y) + B);
    return guard_ratio({perp_max, 0.0, k3min});
  }
  // k3 < 0 corner: the worst point is (perp_min, 0, k3min); see header.
  return guard_ratio({perp_min, 0.0, k3min});
}

double norm_squared(const GaussianPacket& p, const QuadratureSpec& quad,
                    double max_clipped_mass) {
  p.validate();
  const double deficit = coverage_deficit(p, quad);
  if (deficit > max_clipped_mass)
    throw std::runtime_error("norm_squared: quadrature box clips " + std::to_string(deficit) +
                             " of the packet mass");
  if (min_guard_ratio(p, quad) < kDefaultDomainGuard)
    throw std::runtime_error("norm_squared: packet support leaves the guarded k-domain");

  const double B = quad.box_half_width_sigmas * p.sigma;
  const int n = quad.nodes_per_axis;
  const MappedAxis ax = mapped_axis(p.center.x, B, n);
  const MappedAxis ay = mapped_axis(p.center.y, B, n);
  const MappedAxis az = mapped_axis(p.center.z, B, n);

  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double row = 0.0;
      for (int l = 0; l < n; ++l) {
        const Vec3 k{ax.x[i], ay.x[j], az.x[l]};
        const double d2 = std::norm(amplitude_value(p, k, +1)) +
                          std::norm(amplitude_value(p, k, -1));
        row += az.w[l] * d2;
      }
      total += ax.w[i] * ay.w[j] * row;
    }
  return total;
}

}  // namespace helimom
