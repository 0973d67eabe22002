#pragma once

#include <helimom/amplitudes.hpp>
#include <helimom/quadrature.hpp>
#include <helimom/realspace.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace helimom::tool {

// Any problem with a config file — unreadable, malformed, or failing the
// run-config invariants — surfaces as this one type, with the offending
// file, line and field named in the message.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One packet to run, plus an optional private spatial-grid density for the
// real-space cross-check. Mixed-helicity packets interfere at spatial
// frequency 2|k0| and need roughly twice the nodes of a single-helicity
// packet of the same width; a per-packet override keeps that cost local.
struct PacketConfig {
  std::string name;
  GaussianPacket packet;
  int grid_nodes = 0;  // 0 = take the [grid] section's node count
};

struct Tolerances {
  double identity = 1e-12;           // algebraic identity residuals
  double finite_difference = 1e-6;   // FD-contracted rows (scale-adjusted by the verifier)
  double oracle_relative = 1e-3;     // k-space vs real-space moment agreement
  double imag_residual = 1e-10;      // discarded imaginary parts, relative to M0
};

// Everything a run needs, in one value. Defaults reproduce the reference
// run; a config file and command-line flags override fields piecemeal.
struct RunConfig {
  std::vector<PacketConfig> packets;
  QuadratureSpec quadrature{32, 8.0};

  int grid_nodes = 24;                  // spatial nodes per axis (cross-check)
  double grid_half_width_over_sigma = 3.0;  // cube half-width, in units of 1/sigma

  Tolerances tol;

  std::uint64_t seed = 1;
  int samples = 1000;    // algebraic identity suite (full guarded domain)
  int fd_samples = 200;  // finite-difference suite (calibrated direction band)

  // The spatial cube for one packet: per-packet node override applied, the
  // half-width multiplier resolved against the packet's own width.
  SpatialGrid grid_for(const PacketConfig& pc) const;

  // Enforces the run-config invariants: at least one packet, every
  // tolerance positive, node counts >= 8, positive widths and sample
  // counts, and each packet individually well-formed. Throws ConfigError.
  void validate() const;
};

// The built-in reference packets:
//   A - single right-circular packet at k0 = (0,0,2), sigma = 0.1
//   B - equal-weight helicity mixture, sigma = 0.2 (interference fringe at
//       2|k0| => spatial grid bumped to 48 nodes)
//   C - packet A displaced to r0 = (1,0,0) via the linear phase, so the
//       first moment is nontrivial
RunConfig default_config();

// `key = value` lines grouped under [section] headers; '#' and ';' start
// comments. Sections: [run], [quadrature], [grid], [tolerances], and one
// [packet.NAME] per packet. Defining any packet section replaces the
// built-in packets. `origin` names the stream in error messages.
RunConfig parse_config(std::istream& in, const std::string& origin);

RunConfig load_config(const std::string& path);

}  // namespace helimom::tool
