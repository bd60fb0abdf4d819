#pragma once

#include <string>
#include <vector>

#include "cgeo/loop_betti.hpp"

namespace cgeo {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed geodesic configuration: the manifold class, the shared field
/// radicand, and one record per prime closed geodesic.
struct GeodesicConfig {
  ManifoldClass mc;
  long radicand = 2;
  std::vector<GeodesicRecord> geodesics;
  std::string description;
  std::string source;

  long dn_minus_1() const { return mc.dim() - 1; }
};

/// Parses and semantically validates a JSON config. Throws ConfigError with
/// a located message on any syntax or semantic problem.
GeodesicConfig parse_config(const std::string& text);

/// Canonical serialization; parse(emit(parse(t))) == parse(t).
std::string emit_config(const GeodesicConfig& config);

/// Structural validation of every geodesic in the given mode; aggregates
/// per-geodesic violations (prefixed with the geodesic name).
std::vector<std::string> validate_config(const GeodesicConfig& config, ValidationMode mode);

/// Randomized search for a config with the predicted geodesic count, exact
/// resonance, Claim-2 structure and (best effort) the Morse identity on a
/// finite window. Throws SearchExhausted when the attempt budget runs out
/// without any resonance-exact candidate.
GeodesicConfig synthesize_config(long d, long n, unsigned long seed, long attempts);

}  // namespace cgeo
