#include "tools/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace helimom::tool {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

// Comma-separated doubles, each token required to consume fully;
// arity checked against [min_n, max_n].
std::vector<double> parse_numbers(const std::string& origin, int line, const std::string& key,
                                  const std::string& value, std::size_t min_n,
                                  std::size_t max_n) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const std::size_t comma = value.find(',', pos);
    const std::string token =
        trim(value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (token.empty())
      fail(origin, line, key + ": empty number in '" + value + "'");
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v))
      fail(origin, line, key + ": expected a number, got '" + token + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() < min_n || out.size() > max_n) {
    const std::string want = min_n == max_n ? std::to_string(min_n)
                                            : std::to_string(min_n) + ".." + std::to_string(max_n);
    fail(origin, line,
         key + ": expected " + want + " comma-separated numbers, got " +
             std::to_string(out.size()));
  }
  return out;
}

double parse_one(const std::string& origin, int line, const std::string& key,
                 const std::string& value) {
  return parse_numbers(origin, line, key, value, 1, 1)[0];
}

long long parse_int(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
  const double v = parse_one(origin, line, key, value);
  const long long n = static_cast<long long>(v);
  if (static_cast<double>(n) != v)
    fail(origin, line, key + ": expected an integer, got '" + value + "'");
  return n;
}

bool parse_bool(const std::string& origin, int line, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(origin, line, key + ": expected true/false, got '" + value + "'");
}

Vec3 parse_vec3(const std::string& origin, int line, const std::string& key,
                const std::string& value) {
  const auto v = parse_numbers(origin, line, key, value, 3, 3);
  return Vec3{v[0], v[1], v[2]};
}

// One or two numbers: "re" or "re, im".
Complex parse_complex(const std::string& origin, int line, const std::string& key,
                      const std::string& value) {
  const auto v = parse_numbers(origin, line, key, value, 1, 2);
  return Complex(v[0], v.size() == 2 ? v[1] : 0.0);
}

}  // namespace

SpatialGrid RunConfig::grid_for(const PacketConfig& pc) const {
  const int n = pc.grid_nodes > 0 ? pc.grid_nodes : grid_nodes;
  return SpatialGrid{n, grid_half_width_over_sigma / pc.packet.sigma};
}

void RunConfig::validate() const {
  if (packets.empty()) throw ConfigError("config defines no packets");

  const auto positive = [](double v, const char* what) {
    if (!(v > 0.0)) throw ConfigError(std::string("tolerance/width '") + what + "' must be > 0");
  };
  positive(tol.identity, "identity");
  positive(tol.finite_difference, "finite_difference");
  positive(tol.oracle_relative, "oracle_relative");
  positive(tol.imag_residual, "imag_residual");
  positive(quadrature.box_half_width_sigmas, "box_half_width_sigmas");
  positive(grid_half_width_over_sigma, "half_width_over_sigma");

  if (quadrature.nodes_per_axis < 8)
    throw ConfigError("quadrature nodes must be >= 8, got " +
                      std::to_string(quadrature.nodes_per_axis));
  if (grid_nodes < 8)
    throw ConfigError("grid nodes must be >= 8, got " + std::to_string(grid_nodes));
  if (samples < 1 || fd_samples < 1)
    throw ConfigError("sample counts must be >= 1");

  for (const auto& pc : packets) {
    if (pc.grid_nodes != 0 && pc.grid_nodes < 8)
      throw ConfigError("[packet." + pc.name + "] grid_nodes must be >= 8, got " +
                        std::to_string(pc.grid_nodes));
    try {
      pc.packet.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("[packet." + pc.name + "] " + e.what());
    }
  }
}

RunConfig default_config() {
  RunConfig cfg;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  cfg.packets.push_back({"A", GaussianPacket{Vec3{0, 0, 2}, 0.1, 1.0, 0.0}, 0});
  cfg.packets.push_back(
      {"B", GaussianPacket{Vec3{0, 0, 2}, 0.2, inv_sqrt2, inv_sqrt2}, 48});
  GaussianPacket c{Vec3{0, 0, 2}, 0.1, 1.0, 0.0};
  c.r0 = Vec3{1, 0, 0};
  cfg.packets.push_back({"C", c, 0});
  return cfg;
}

RunConfig parse_config(std::istream& in, const std::string& origin) {
  RunConfig cfg = default_config();
  bool replaced_builtin_packets = false;

  enum class Section { none, run, quadrature, grid, tolerances, packet };
  Section section = Section::none;
  PacketConfig* packet = nullptr;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const std::size_t comment = s.find_first_of("#;");
    if (comment != std::string::npos) s.erase(comment);
    s = trim(s);
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s.back() != ']') fail(origin, line, "unterminated section header '" + s + "'");
      const std::string name = trim(s.substr(1, s.size() - 2));
      if (name == "run") {
        section = Section::run;
      } else if (name == "quadrature") {
        section = Section::quadrature;
      } else if (name == "grid") {
        section = Section::grid;
      } else if (name == "tolerances") {
        section = Section::tolerances;
      } else if (name.rfind("packet.", 0) == 0) {
        const std::string pname = trim(name.substr(7));
        if (pname.empty()) fail(origin, line, "packet section needs a name: [packet.NAME]");
        // The first explicit packet section discards the built-ins: a file
        // that names packets means exactly those packets.
        if (!replaced_builtin_packets) {
          cfg.packets.clear();
          replaced_builtin_packets = true;
        }
        for (const auto& pc : cfg.packets)
          if (pc.name == pname) fail(origin, line, "duplicate packet section [packet." + pname + "]");
        cfg.packets.push_back({pname, GaussianPacket{}, 0});
        packet = &cfg.packets.back();
        section = Section::packet;
      } else {
        fail(origin, line, "unknown section [" + name + "]");
      }
      continue;
    }

    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(origin, line, "expected 'key = value', got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(origin, line, "missing key before '='");
    if (value.empty()) fail(origin, line, key + ": missing value");

    switch (section) {
      case Section::none:
        fail(origin, line, "'" + key + "' appears before any [section] header");

      case Section::run:
        if (key == "seed") {
          const long long v = parse_int(origin, line, key, value);
          if (v < 0) fail(origin, line, "seed must be >= 0");
          cfg.seed = static_cast<std::uint64_t>(v);
        } else if (key == "samples") {
          cfg.samples = static_cast<int>(parse_int(origin, line, key, value));
        } else if (key == "fd_samples") {
          cfg.fd_samples = static_cast<int>(parse_int(origin, line, key, value));
        } else {
          fail(origin, line, "unknown key '" + key + "' in [run]");
        }
        break;

      case Section::quadrature:
        if (key == "nodes") {
          cfg.quadrature.nodes_per_axis = static_cast<int>(parse_int(origin, line, key, value));
        } else if (key == "box_half_width_sigmas") {
          cfg.quadrature.box_half_width_sigmas = parse_one(origin, line, key, value);
        } else {
          fail(origin, line, "unknown key '" + key + "' in [quadrature]");
        }
        break;

      case Section::grid:
        if (key == "nodes") {
          cfg.grid_nodes = static_cast<int>(parse_int(origin, line, key, value));
        } else if (key == "half_width_over_sigma") {
          cfg.grid_half_width_over_sigma = parse_one(origin, line, key, value);
        } else {
          fail(origin, line, "unknown key '" + key + "' in [grid]");
        }
        break;

      case Section::tolerances:
        if (key == "identity") {
          cfg.tol.identity = parse_one(origin, line, key, value);
        } else if (key == "finite_difference") {
          cfg.tol.finite_difference = parse_one(origin, line, key, value);
        } else if (key == "oracle_relative") {
          cfg.tol.oracle_relative = parse_one(origin, line, key, value);
        } else if (key == "imag_residual") {
          cfg.tol.imag_residual = parse_one(origin, line, key, value);
        } else {
          fail(origin, line, "unknown key '" + key + "' in [tolerances]");
        }
        break;

      case Section::packet:
        if (key == "center") {
          packet->packet.center = parse_vec3(origin, line, key, value);
        } else if (key == "sigma") {
          packet->packet.sigma = parse_one(origin, line, key, value);
        } else if (key == "weight_plus") {
          packet->packet.weight_plus = parse_complex(origin, line, key, value);
        } else if (key == "weight_minus") {
          packet->packet.weight_minus = parse_complex(origin, line, key, value);
        } else if (key == "r0") {
          packet->packet.r0 = parse_vec3(origin, line, key, value);
        } else if (key == "normalize") {
          packet->packet.normalize = parse_bool(origin, line, key, value);
        } else if (key == "grid_nodes") {
          packet->grid_nodes = static_cast<int>(parse_int(origin, line, key, value));
        } else {
          fail(origin, line, "unknown key '" + key + "' in [packet." + packet->name + "]");
        }
        break;
    }
  }

  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

}  // namespace helimom::tool
