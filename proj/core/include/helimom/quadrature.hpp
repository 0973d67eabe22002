#pragma once

#include <helimom/vec3.hpp>

#include <array>
#include <functional>
#include <vector>

namespace helimom {

// Gauss-Legendre rule on [-1, 1]: n nodes integrate polynomials up to degree
// 2n-1 exactly. Nodes by Newton iteration on the three-term Legendre
// recurrence from the Chebyshev initial guess; converges to machine
// precision in a handful of steps for any practical n.
struct GaussLegendre {
  std::vector<double> x;  // nodes, ascending
  std::vector<double> w;  // positive weights, sum = 2

  static const GaussLegendre& rule(int n);  // cached per n; n >= 1
};

// Tensor-product specification for the k-space integrals: a cube of
// half-width `box_half_width_sigmas * sigma` centered on the packet center.
// The default 32 nodes across 8 sigma resolves a Gaussian envelope to well
// below 1e-10; 24 nodes is the cross-check size.
struct QuadratureSpec {
  int nodes_per_axis = 32;
  double box_half_width_sigmas = 8.0;
};

// One axis of a mapped tensor grid: x_i in [center-h, center+h] with weights
// absorbing the interval scaling.
struct MappedAxis {
  std::vector<double> x;
  std::vector<double> w;
};

MappedAxis mapped_axis(double center, double half_width, int nodes);

// Runs fn(i) for i in [0, count) across a small thread pool and guarantees a
// deterministic result: workers only fill independent slots; any reduction
// over slots must be done by the caller in index order. With one hardware
// thread this degenerates to a plain loop.
void parallel_for_index(int count, const std::function<void(int)>& fn);

}  // namespace helimom
