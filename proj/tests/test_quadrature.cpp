#include <doctest.h>

#include <helimom/quadrature.hpp>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace helimom;

namespace {
constexpr double NODE_EPS = 1.e-14;
constexpr double EXACT_EPS = 1.e-13;
}

TEST_SUITE("quadrature") {

TEST_CASE("five-point Gauss-Legendre rule matches the published nodes and weights") {
  const auto& r = GaussLegendre::rule(5);
  REQUIRE(r.x.size() == 5);
  const double xs[5] = {-0.906179845938664, -0.538469310105683, 0.0, 0.538469310105683,
                        0.906179845938664};
  const double ws[5] = {0.236926885056189, 0.478628670499366, 0.568888888888889,
                        0.478628670499366, 0.236926885056189};
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(std::abs(r.x[i] - xs[i]) < NODE_EPS);
    CHECK(std::abs(r.w[i] - ws[i]) < NODE_EPS);
  }
}

TEST_CASE("n nodes integrate monomials exactly through degree 2n-1 and no further") {
  for (int n : {2, 5, 8, 16}) {
    const auto& r = GaussLegendre::rule(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.w[i] * std::pow(r.x[i], p);
      const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
      CAPTURE(n);
      CAPTURE(p);
      CHECK(std::abs(s - exact) < EXACT_EPS);
    }
  }
  // Sharpness: the two-point rule must miss x^4 by a visible margin.
  const auto& r2 = GaussLegendre::rule(2);
  double s = 0.0;
  for (int i = 0; i < 2; ++i) s += r2.w[i] * std::pow(r2.x[i], 4);
  CHECK(std::abs(s - 0.4) > 1e-2);
}

TEST_CASE("weights are positive, sum to two, and nodes come out symmetric and ascending") {
  for (int n = 1; n <= 40; ++n) {
    const auto& r = GaussLegendre::rule(n);
    REQUIRE(int(r.x.size()) == n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(r.w[i] > 0.0);
      sum += r.w[i];
      if (i > 0) CHECK(r.x[i] > r.x[i - 1]);
      CHECK(std::abs(r.x[i] + r.x[n - 1 - i]) < NODE_EPS);
    }
    CAPTURE(n);
    CHECK(std::abs(sum - 2.0) < NODE_EPS * n);
  }
}

TEST_CASE("the cached rule is returned by reference, not recomputed") {
  const auto* first = &GaussLegendre::rule(7);
  const auto* second = &GaussLegendre::rule(7);
  CHECK(first == second);
}

TEST_CASE("degenerate rule orders are rejected") {
  CHECK_THROWS_AS(GaussLegendre::rule(0), std::invalid_argument);
  CHECK_THROWS_AS(GaussLegendre::rule(-3), std::invalid_argument);
  CHECK_THROWS_AS(mapped_axis(0.0, 0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(mapped_axis(0.0, -1.0, 8), std::invalid_argument);
}

TEST_CASE("a mapped axis integrates a Gaussian over a finite window to near machine precision") {
  const auto ax = mapped_axis(0.0, 6.0, 48);
  double s = 0.0, wsum = 0.0;
  for (size_t i = 0; i < ax.x.size(); ++i) {
    s += ax.w[i] * std::exp(-ax.x[i] * ax.x[i]);
    wsum += ax.w[i];
  }
  CAPTURE(s - std::sqrt(M_PI));
  CHECK(std::abs(s - std::sqrt(M_PI)) < EXACT_EPS);
  CHECK(std::abs(wsum - 12.0) < NODE_EPS * 48);

  // Shifted window: odd moments about the center integrate to zero.
  const auto sh = mapped_axis(2.5, 0.75, 16);
  double odd = 0.0;
  for (size_t i = 0; i < sh.x.size(); ++i) odd += sh.w[i] * (sh.x[i] - 2.5);
  CHECK(std::abs(odd) < NODE_EPS);
}

TEST_CASE("parallel_for_index visits every index exactly once") {
  const int count = 1000;
  std::vector<std::atomic<int>> hits(count);
  parallel_for_index(count, [&](int i) { hits[i].fetch_add(1); });
  for (int i = 0; i < count; ++i) {
    CAPTURE(i);
    REQUIRE(hits[i].load() == 1);
  }
  bool called = false;
  parallel_for_index(0, [&](int) { called = true; });
  CHECK(!called);
}

}  // TEST_SUITE
