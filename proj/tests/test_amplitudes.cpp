#include <doctest.h>

#include <helimom/amplitudes.hpp>
#include <helimom/polarization.hpp>
#include <helimom/quadrature.hpp>

#include <cmath>
#include <stdexcept>

using namespace helimom;

namespace {

constexpr double NORM_EPS = 1.e-9;
constexpr double GRAD_FD_EPS = 1.e-8;
constexpr double LAP_FD_EPS = 1.e-3;  // second difference pays eps/h^2
constexpr double FD_H = 1.e-6;

GaussianPacket packet_a() { return {Vec3{0, 0, 2}, 0.1, 1.0, 0.0}; }
GaussianPacket packet_b() {
  return {Vec3{0, 0, 2}, 0.2, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
}
GaussianPacket packet_c() {
  GaussianPacket p = packet_a();
  p.r0 = Vec3{1, 0, 0};
  return p;
}

}  // namespace

TEST_SUITE("amplitudes") {

TEST_CASE("the normalization constant makes the two-helicity mass unity") {
  const QuadratureSpec quad;
  for (const GaussianPacket& p : {packet_a(), packet_b(), packet_c()}) {
    const double n2 = norm_squared(p, quad);
    CAPTURE(p.sigma);
    CHECK(std::abs(n2 - 1.0) < NORM_EPS);
  }
  GaussianPacket un = packet_a();
  un.normalize = false;
  // Unnormalized mass of a unit-weight Gaussian: (2 pi sigma^2)^{3/2}.
  const double want = std::pow(2.0 * M_PI * un.sigma * un.sigma, 1.5);
  CHECK(std::abs(norm_squared(un, quad) - want) < NORM_EPS * want);
}

TEST_CASE("analytic gradient and laplacian match central differences") {
  const GaussianPacket p = packet_c();  // r0 != 0 exercises the phase term
  for (const Vec3& k : {Vec3{0.05, -0.03, 2.11}, Vec3{-0.1, 0.12, 1.9}, Vec3{0.02, 0.0, 2.2}}) {
    const AmplitudeSample s = eval_amplitude(p, k, +1);
    CVec3 grad_fd;
    Complex lap_fd = -6.0 * s.value;
    for (int a = 0; a < 3; ++a) {
      Vec3 kp = k, km = k;
      kp[a] += FD_H;
      km[a] -= FD_H;
      const Complex vp = amplitude_value(p, kp, +1);
      const Complex vm = amplitude_value(p, km, +1);
      grad_fd[a] = (vp - vm) / (2 * FD_H);
      lap_fd += vp + vm;
    }
    lap_fd /= FD_H * FD_H;
    CAPTURE(k.x);
    CHECK(norm(grad_fd - s.gradient) < GRAD_FD_EPS * norm(s.gradient));
    CHECK(std::abs(lap_fd - s.laplacian) < LAP_FD_EPS * std::abs(s.laplacian));
  }
}

TEST_CASE("value, gradient and laplacian are tied by the logarithmic derivative") {
  const GaussianPacket p = packet_c();
  const Vec3 k{0.07, -0.02, 2.05};
  const AmplitudeSample s = eval_amplitude(p, k, +1);
  const Complex I(0, 1);
  CVec3 g;
  for (int a = 0; a < 3; ++a)
    g[a] = -(k[a] - p.center[a]) / (2 * p.sigma * p.sigma) - I * p.r0[a];
  CHECK(norm(s.gradient - s.value * g) < 1e-13 * norm(s.gradient));
  const Complex want_lap = s.value * (g.x * g.x + g.y * g.y + g.z * g.z - 1.5 / (p.sigma * p.sigma));
  CHECK(std::abs(s.laplacian - want_lap) < 1e-12 * std::abs(want_lap));
}

TEST_CASE("amplitude_value is the cheap path of eval_amplitude and carries the helicity weight") {
  GaussianPacket p = packet_a();
  p.weight_plus = Complex(0.3, 0.0);
  p.weight_minus = Complex(0.0, 0.4);
  const Vec3 k{0.05, 0.1, 2.03};
  CHECK(std::abs(amplitude_value(p, k, +1) - eval_amplitude(p, k, +1).value) == 0.0);
  CHECK(std::abs(amplitude_value(p, k, -1) - eval_amplitude(p, k, -1).value) == 0.0);
  const Complex ratio = amplitude_value(p, k, -1) / amplitude_value(p, k, +1);
  CHECK(std::abs(ratio - p.weight_minus / p.weight_plus) < 1e-14);
  CHECK_THROWS_AS(amplitude_value(p, k, 0), std::out_of_range);
  CHECK_THROWS_AS(eval_amplitude(p, k, 2), std::out_of_range);
}

TEST_CASE("validate rejects degenerate parameters") {
  GaussianPacket p = packet_a();
  CHECK_NOTHROW(p.validate());
  p.sigma = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.sigma = -0.1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = packet_a();
  p.weight_plus = p.weight_minus = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.normalize = false;  // without normalization the zero packet is just the zero field
  CHECK_NOTHROW(p.validate());
  CHECK(p.norm_constant() == 1.0);
}

TEST_CASE("coverage deficit is the closed-form product of per-axis Gaussian tails") {
  const GaussianPacket p = packet_a();
  const double e1 = std::erf(1.0 / std::sqrt(2.0));
  CHECK(std::abs(coverage_deficit(p, QuadratureSpec{32, 1.0}) - (1.0 - e1 * e1 * e1)) < 1e-14);
  CHECK(coverage_deficit(p, QuadratureSpec{32, 8.0}) < 1e-14);
  CHECK(coverage_deficit(p, QuadratureSpec{32, 1.0}) >
        coverage_deficit(p, QuadratureSpec{32, 2.0}));
  CHECK(coverage_deficit(p, QuadratureSpec{32, 2.0}) >
        coverage_deficit(p, QuadratureSpec{32, 4.0}));
}

TEST_CASE("norm_squared refuses a clipped box and support that reaches the guard") {
  CHECK_THROWS_AS(norm_squared(packet_a(), QuadratureSpec{32, 1.0}), std::runtime_error);
  const GaussianPacket south{Vec3{0, 0, -2}, 0.1, 1.0, 0.0};
  CHECK_THROWS_AS(norm_squared(south, QuadratureSpec{}), std::runtime_error);
}

TEST_CASE("the guard-ratio minimum over the box matches a dense scan") {
  const GaussianPacket d{Vec3{std::sqrt(2.0), 0, std::sqrt(2.0)}, 0.1, 1.0, 0.0};
  for (const GaussianPacket& p : {packet_a(), packet_b(), d}) {
    const QuadratureSpec quad;
    const double closed = min_guard_ratio(p, quad);
    const double B = quad.box_half_width_sigmas * p.sigma;
    double scan = 1e300;
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j)
        for (int l = 0; l <= 20; ++l) {
          const Vec3 k = p.center + Vec3{-B + i * B / 10, -B + j * B / 10, -B + l * B / 10};
          scan = std::min(scan, guard_ratio(k));
        }
    CAPTURE(closed);
    CAPTURE(scan);
    // The scan includes the corners, where the true minimum sits.
    CHECK(scan >= closed - 1e-12);
    CHECK(std::abs(scan - closed) < 1e-12);
  }
}

}  // TEST_SUITE
