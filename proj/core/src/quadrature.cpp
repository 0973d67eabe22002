#include <helimom/quadrature.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace helimom {

namespace {

GaussLegendre compute_rule(int n) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: need at least one node");
  GaussLegendre r;
  r.x.resize(n);
  r.w.resize(n);
  // Roots come in +- pairs; solve for the non-negative half and mirror.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th largest root.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < n; ++j) {
        const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[n - 1 - i] = x;
    r.x[i] = -x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;  // exact center node
  return r;
}

}  // namespace

const GaussLegendre& GaussLegendre::rule(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

MappedAxis mapped_axis(double center, double half_width, int nodes) {
  if (!(half_width > 0.0)) throw std::invalid_argument("mapped_axis: half_width must be positive");
  const GaussLegendre& gl = GaussLegendre::rule(nodes);
  MappedAxis a;
  a.x.resize(nodes);
  a.w.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    a.x[i] = center + half_width * gl.x[i];
    a.w[i] = half_width * gl.w[i];
  }
  return a;
}

void parallel_for_index(int count, const std::function<void(int)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(hw ? hw : 1);
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([t, workers, count, &fn] {
      for (int i = t; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace helimom
