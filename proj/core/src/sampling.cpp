#include <helimom/sampling.hpp>

#include <cmath>
#include <stdexcept>

namespace helimom {

KSampler::KSampler(std::uint64_t seed, double min_magnitude, double max_magnitude,
                   double guard)
    : rng_(seed) {
  if (!(min_magnitude > 0.0) || !(max_magnitude >= min_magnitude))
    throw std::invalid_argument("KSampler: need 0 < min_magnitude <= max_magnitude");
  if (!(guard > 0.0) || !(guard < 2.0))
    throw std::invalid_argument("KSampler: guard must lie in (0, 2)");
  log_min_ = std::log(min_magnitude);
  log_span_ = std::log(max_magnitude) - log_min_;
  u3_min_ = guard - 1.0;
  u3_span_ = 1.0 - u3_min_;
}

KSampler KSampler::banded(std::uint64_t seed, double min_magnitude, double max_magnitude,
                          double u3_lo, double u3_hi) {
  if (!(u3_lo >= -1.0) || !(u3_hi <= 1.0) || !(u3_lo < u3_hi))
    throw std::invalid_argument("KSampler: need -1 <= u3_lo < u3_hi <= 1");
  KSampler s(seed, min_magnitude, max_magnitude);
  s.u3_min_ = u3_lo;
  s.u3_span_ = u3_hi - u3_lo;
  return s;
}

double KSampler::uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Vec3 KSampler::next() {
  const double mag = std::exp(log_min_ + log_span_ * uniform01());
  const double u3 = u3_min_ + u3_span_ * uniform01();
  const double phi = 2.0 * M_PI * uniform01();
  const double perp = mag * std::sqrt(std::max(0.0, 1.0 - u3 * u3));
  return {perp * std::cos(phi), perp * std::sin(phi), mag * u3};
}

}  // namespace helimom
