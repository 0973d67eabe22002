#pragma once

#include <helimom/polarization.hpp>
#include <helimom/vec3.hpp>

#include <cstdint>
#include <random>

namespace helimom {

// Random wave vectors drawn from the guarded domain: direction uniform over
// the spherical cap u3 >= guard - 1 (the sphere minus the cone around the
// negative 3-axis excluded by the domain guard), magnitude log-uniform in
// [min_magnitude, max_magnitude].
//
// Doubles are produced from the raw engine words ((x >> 11) * 2^-53) instead
// of std::uniform_real_distribution, whose output is implementation-defined;
// a fixed seed therefore yields the same sample stream on any platform,
// which is what makes fixed-seed reports bit-identical.
class KSampler {
 public:
  explicit KSampler(std::uint64_t seed, double min_magnitude = 1e-2,
                    double max_magnitude = 1e2, double guard = kDefaultDomainGuard);

  // Band-limited variant for the finite-difference suites, whose scaled
  // tolerances are calibrated for directions away from both poles: u3
  // uniform in [u3_lo, u3_hi] instead of the full guarded cap.
  static KSampler banded(std::uint64_t seed, double min_magnitude, double max_magnitude,
                         double u3_lo, double u3_hi);

  Vec3 next();
  KVec next_kvec() { return KVec::checked(next()); }

 private:
  double uniform01();  // in [0, 1)

  std::mt19937_64 rng_;
  double log_min_, log_span_;
  double u3_min_, u3_span_;
};

}  // namespace helimom
