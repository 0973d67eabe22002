#include <doctest.h>

#include <helimom/connection.hpp>
#include <helimom/moments.hpp>

#include <cmath>
#include <stdexcept>

using namespace helimom;

namespace {

// Reference packets used throughout: on-axis single helicity (a), on-axis
// mixed helicity (b), the displaced copy of a (c), and an oblique single
// helicity (d).
GaussianPacket packet_a() { return {Vec3{0, 0, 2}, 0.1, 1.0, 0.0}; }
GaussianPacket packet_b() {
  return {Vec3{0, 0, 2}, 0.2, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
}
GaussianPacket packet_c() {
  GaussianPacket p = packet_a();
  p.r0 = Vec3{1, 0, 0};
  return p;
}
GaussianPacket packet_d() { return {Vec3{std::sqrt(2.0), 0, std::sqrt(2.0)}, 0.1, 1.0, 0.0}; }

const QuadratureSpec Q32{};       // 32 nodes, 8 sigma
const QuadratureSpec Q24{24, 8.0};

constexpr double FROZEN_REL = 1.e-12;  // regression pins for previously cross-checked values
constexpr double GAUGE_REL = 1.e-10;
constexpr double IMAG_REL = 1.e-10;

MomentOptions geometric() {
  MomentOptions o;
  o.derivative_terms = DerivativeTerms::single_mode;
  return o;
}

MomentOptions rotated() {
  MomentOptions o;
  o.gauge_rotated = true;
  return o;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("second moments of the reference packets are frozen") {
  const MomentReport a = kspace_moments(packet_a(), Q32);
  CHECK(std::abs(a.M0 - 1.0) < 1e-9);
  CHECK(std::abs(a.M2 - 75.250945407930) < FROZEN_REL * 75.25);
  CHECK(std::abs(a.delta_r - 8.67473027872068) < FROZEN_REL * 8.7);
  CHECK(a.residual_imag < IMAG_REL * a.M0);
  CHECK(a.convergence_delta > 0.0);
  CHECK(a.convergence_delta < 1e-5 * a.M2);
  CHECK(norm(a.M1) < 1e-12);

  const MomentReport b = kspace_moments(packet_b(), Q32);
  CHECK(std::abs(b.M2 - 19.003882081637) < FROZEN_REL * 19.0);
  CHECK(b.residual_imag < IMAG_REL * b.M0);
}

TEST_CASE("the convergence delta is the gap to the three-quarter companion rule") {
  const MomentReport fine = kspace_moments(packet_a(), Q32);
  const MomentReport coarse = kspace_moments(packet_a(), Q24);
  CHECK(std::abs(fine.convergence_delta - std::abs(fine.M2 - coarse.M2)) <
        1e-12 * fine.convergence_delta + 1e-18);
}

TEST_CASE("convenience wrappers project the full report") {
  const MomentReport a = kspace_moments(packet_b(), Q24);
  CHECK(moment0(packet_b(), Q24) == a.M0);
  CHECK(norm(moment1(packet_b(), Q24) - a.M1) == 0.0);
  CHECK(moment2(packet_b(), Q24) == a.M2);
}

TEST_CASE("a linear phase translates the centroid exactly and leaves the spread alone") {
  const MomentReport a = kspace_moments(packet_a(), Q32);
  const MomentReport c = kspace_moments(packet_c(), Q32);
  const Vec3 r0 = packet_c().r0;
  CHECK(norm(c.M1 / c.M0 - r0) < 1e-12);
  // <r^2> picks up exactly |r0|^2 (the cross term vanishes with M1(a) = 0).
  CHECK(std::abs(c.M2 - a.M2 - norm2(r0) * a.M0) < 1e-10 * c.M2);
  CHECK(std::abs(c.delta_r - a.delta_r) < 1e-10 * a.delta_r);
}

TEST_CASE("the centroid of a real on-center packet is minus the connection at the center") {
  // The connection is componentwise harmonic away from its singular ray
  // (div A = 0 and curl A is the monopole field, which is itself curl-free
  // there), so the isotropic Gaussian average <A> collapses to A(k0) by the
  // mean-value property -- the residual is box truncation, not O(sigma^2).
  const MomentReport d = kspace_moments(packet_d(), Q32);
  const Vec3 A0 = berry_connection(KVec::checked(packet_d().center));
  CAPTURE(norm(d.M1 + A0 * d.M0));
  CHECK(norm(d.M1 + A0 * d.M0) < 1e-12);
}

TEST_CASE("the envelope gradient adds exactly 3/(4 sigma^2) to the second moment") {
  for (const GaussianPacket& p : {packet_a(), packet_b()}) {
    const MomentReport full = kspace_moments(p, Q32);
    const MomentReport geo = kspace_moments(p, Q32, geometric());
    const double want = 3.0 / (4.0 * p.sigma * p.sigma);
    CAPTURE(p.sigma);
    CHECK(std::abs(full.M2 - geo.M2 - want) < 1e-9 * full.M2);
  }
}

TEST_CASE("all moments are gauge invariant to rounding") {
  for (const GaussianPacket& p : {packet_a(), packet_b(), packet_c(), packet_d()}) {
    const MomentReport plain = kspace_moments(p, Q32);
    const MomentReport rot = kspace_moments(p, Q32, rotated());
    CAPTURE(p.center.x);
    CHECK(std::abs(rot.M0 - plain.M0) < GAUGE_REL * plain.M0);
    CHECK(norm(rot.M1 - plain.M1) < GAUGE_REL * plain.M0 * (1.0 + plain.delta_r));
    CHECK(std::abs(rot.M2 - plain.M2) < GAUGE_REL * plain.M2);
    CHECK(std::abs(rot.delta_r - plain.delta_r) < GAUGE_REL * plain.delta_r);
  }
}

TEST_CASE("narrow single-mode packets localize at the inverse frequency") {
  const double kappa = 2.0;
  auto excess = [&](double sigma) {
    const GaussianPacket p{Vec3{0, 0, kappa}, sigma, 1.0, 0.0};
    const MomentReport g = kspace_moments(p, Q32, geometric());
    return g.delta_r * kappa - 1.0;
  };
  // First-order in sigma^2: excess = (3/4) sigma^2/kappa^2 + O(sigma^4).
  const double e1 = excess(0.02 * kappa);
  const double e2 = excess(0.01 * kappa);
  const double p1 = 0.75 * 0.0004;  // (0.02)^2 * 3/4
  const double p2 = 0.75 * 0.0001;
  CAPTURE(e1);
  CAPTURE(e2);
  CHECK(std::abs(e1 / p1 - 1.0) < 0.01);
  CHECK(std::abs(e2 / p2 - 1.0) < 0.01);
  CHECK(std::abs(e1 / e2 / 4.0 - 1.0) < 0.01);
}

TEST_CASE("a midpoint-rule evaluation of <-L> reproduces the geometric second moment") {
  const GaussianPacket p = packet_a();
  const MomentReport geo = kspace_moments(p, Q32, geometric());
  const int n = 48;
  const double B = 8.0 * p.sigma;
  const double h = 2.0 * B / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const Vec3 k =
            p.center + Vec3{-B + (i + 0.5) * h, -B + (j + 0.5) * h, -B + (l + 0.5) * h};
        const double w2 =
            std::norm(amplitude_value(p, k, +1)) + std::norm(amplitude_value(p, k, -1));
        sum += h * h * h * w2 * (-connection_scalar_raw(k));
      }
  CAPTURE(sum);
  CHECK(std::abs(sum - geo.M2) < 1e-10 * geo.M2);
}

TEST_CASE("gauge-rotated evaluation refuses quadrature nodes on the axis") {
  // An odd node count puts one node exactly on the k3-axis for an on-axis
  // packet; the rotated gauge is undefined there while the plain path is fine.
  const QuadratureSpec odd{31, 8.0};
  CHECK_THROWS_AS(kspace_moments(packet_a(), odd, rotated()), std::domain_error);
  const MomentReport plain = kspace_moments(packet_a(), odd);
  CHECK(std::abs(plain.M2 - 75.250945407930) < 1e-3 * 75.25);
}

TEST_CASE("structural guards reject impossible reports and bad inputs") {
  CHECK_NOTHROW(uncertainty(packet_a(), Q32));
  CHECK_NOTHROW(uncertainty(packet_d(), Q24));
  // An absurd imaginary-residual tolerance must trip the guard.
  CHECK_THROWS_AS(uncertainty(packet_a(), Q32, 1e-17), std::runtime_error);
  CHECK_THROWS_AS(kspace_moments(packet_a(), QuadratureSpec{6, 8.0}), std::invalid_argument);
  CHECK_THROWS_AS(kspace_moments(packet_a(), QuadratureSpec{32, 0.5}), std::runtime_error);
  const GaussianPacket south{Vec3{0, 0, -2}, 0.1, 1.0, 0.0};
  CHECK_THROWS_AS(kspace_moments(south, Q32), std::runtime_error);
}

}  // TEST_SUITE
