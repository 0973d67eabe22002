#include <doctest.h>

#include <helimom/vec3.hpp>

using namespace helimom;

namespace {
constexpr double EPS = 1.e-15;
}

TEST_SUITE("vec3") {

TEST_CASE("real cross product is right-handed, antisymmetric and orthogonal to its factors") {
  const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  CHECK(norm(cross(ex, ey) - ez) == 0.0);
  CHECK(norm(cross(ey, ez) - ex) == 0.0);
  CHECK(norm(cross(ez, ex) - ey) == 0.0);

  const Vec3 a{0.3, -1.2, 0.7}, b{-0.5, 0.4, 2.1};
  CAPTURE(norm(cross(a, b) + cross(b, a)));
  CHECK(norm(cross(a, b) + cross(b, a)) == 0.0);
  CHECK(std::abs(dot(a, cross(a, b))) < EPS);
  CHECK(std::abs(dot(b, cross(a, b))) < EPS);
  CHECK(std::abs(norm2(a) - dot(a, a)) == 0.0);
}

TEST_CASE("hermitian inner product is antilinear in the first slot and linear in the second") {
  const CVec3 a{{0.3, -0.8}, {1.1, 0.2}, {-0.4, 0.9}};
  const CVec3 b{{-1.0, 0.5}, {0.6, -0.3}, {0.2, 0.7}};
  const Complex alpha{0.4, -1.3};

  CHECK(std::abs(cdot(alpha * a, b) - std::conj(alpha) * cdot(a, b)) < EPS * 10);
  CHECK(std::abs(cdot(a, alpha * b) - alpha * cdot(a, b)) < EPS * 10);
  CHECK(std::abs(cdot(a, b) - std::conj(cdot(b, a))) == 0.0);
  CHECK(norm2(a) >= 0.0);
  CHECK(std::abs(norm2(a) - std::norm(a.x) - std::norm(a.y) - std::norm(a.z)) < EPS * 10);
  CHECK(norm(conj(a) - CVec3{std::conj(a.x), std::conj(a.y), std::conj(a.z)}) == 0.0);
  CHECK(norm(real(a) - Vec3{0.3, 1.1, -0.4}) == 0.0);
  CHECK(norm(imag(a) - Vec3{-0.8, 0.2, 0.9}) == 0.0);
}

TEST_CASE("matrix adjoint reverses products and moves across the inner product") {
  Mat3c A, B;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      A.m[i][j] = Complex(0.1 * (i + 1) * (j + 2), 0.3 * i - 0.2 * j);
      B.m[i][j] = Complex(-0.4 * i + 0.5 * j, 0.1 * (i - j));
    }

  CHECK(max_abs(adjoint(A * B) - adjoint(B) * adjoint(A)) < EPS * 10);
  CHECK(max_abs(adjoint(adjoint(A)) - A) == 0.0);

  const CVec3 v{{0.2, 0.1}, {-0.7, 0.4}, {0.5, -0.6}};
  const CVec3 w{{1.0, -0.2}, {0.3, 0.8}, {-0.1, 0.4}};
  CAPTURE(std::abs(cdot(v, A * w) - cdot(adjoint(A) * v, w)));
  CHECK(std::abs(cdot(v, A * w) - cdot(adjoint(A) * v, w)) < EPS * 10);
}

}  // TEST_SUITE
