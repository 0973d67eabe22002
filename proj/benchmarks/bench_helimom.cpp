#include <benchmark/benchmark.h>

#include <helimom/amplitudes.hpp>
#include <helimom/connection.hpp>
#include <helimom/mode_algebra.hpp>
#include <helimom/moments.hpp>
#include <helimom/polarization.hpp>
#include <helimom/realspace.hpp>
#include <helimom/sampling.hpp>

namespace {

using namespace helimom;

GaussianPacket reference_packet() { return {Vec3{0, 0, 2}, 0.1, 1.0, 0.0}; }

GaussianPacket mixed_packet() {
  return {Vec3{0, 0, 2}, 0.2, 0.70710678118654752, 0.70710678118654752};
}

// Pre-drawn sample points so the RNG never sits inside the timed loop.
std::vector<KVec> sample_points(int n) {
  KSampler sampler(12345);
  std::vector<KVec> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(sampler.next_kvec());
  return pts;
}

void BasisConstruction(benchmark::State& state) {
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const LinearBasis b = linear_basis(pts[i++ & 1023].k);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BasisConstruction);

void BasisIdentitySuite(benchmark::State& state) {
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const IdentityReport rep = verify_basis_identities(pts[i++ & 1023], 1e-12);
    benchmark::DoNotOptimize(rep.entries.size());
  }
}
BENCHMARK(BasisIdentitySuite);

void ConnectionClosedForm(benchmark::State& state) {
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec3 a = berry_connection_raw(pts[i++ & 1023].k);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(ConnectionClosedForm);

void ConnectionDerivativeSuite(benchmark::State& state) {
  // Fixed probe in the calibrated band; the suite itself is ~60 basis
  // evaluations behind finite-difference stencils.
  const KVec k = KVec::checked(Vec3{0.7, -0.3, 1.2});
  for (auto _ : state) {
    const IdentityReport rep = verify_connection_identities(k, fd_step(k.k), 1e-6);
    benchmark::DoNotOptimize(rep.entries.size());
  }
}
BENCHMARK(ConnectionDerivativeSuite);

void AmplitudeEvaluation(benchmark::State& state) {
  const GaussianPacket p = reference_packet();
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const AmplitudeSample s = eval_amplitude(p, pts[i++ & 1023].k, +1);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(AmplitudeEvaluation);

// The full k-space moment pipeline at the node counts the argument selects;
// 24 is the cross-check size, 32 the production size.
void MomentPipeline(benchmark::State& state) {
  const GaussianPacket p = reference_packet();
  const QuadratureSpec quad{static_cast<int>(state.range(0)), 8.0};
  for (auto _ : state) {
    const MomentReport rep = kspace_moments(p, quad);
    benchmark::DoNotOptimize(rep.M2);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MomentPipeline)->Arg(16)->Arg(24)->Arg(32)->Complexity(benchmark::oNCubed);

void FieldSynthesisPoint(benchmark::State& state) {
  const GaussianPacket p = mixed_packet();
  const QuadratureSpec quad{24, 8.0};
  const Vec3 r{0.4, -0.2, 0.3};
  for (auto _ : state) {
    const FieldSample f = synthesize_field(p, quad, r);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(FieldSynthesisPoint);

// Whole-grid separable synthesis plus moment accumulation, small sizes: the
// interesting scaling is in the three phase-table contractions.
void RealspaceMomentGrid(benchmark::State& state) {
  const GaussianPacket p = reference_packet();
  const QuadratureSpec quad{16, 8.0};
  const SpatialGrid grid{static_cast<int>(state.range(0)), 0.0};
  for (auto _ : state) {
    const RealspaceMoments m = realspace_moments(p, quad, grid);
    benchmark::DoNotOptimize(m.M2);
  }
}
BENCHMARK(RealspaceMomentGrid)->Arg(8)->Arg(12)->Arg(16);

void CommutatorTable(benchmark::State& state) {
  for (auto _ : state) {
    const AlgebraReport rep = verify_transverse_commutators();
    benchmark::DoNotOptimize(rep.entries.size());
  }
}
BENCHMARK(CommutatorTable);

}  // namespace

BENCHMARK_MAIN();
