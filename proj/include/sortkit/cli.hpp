#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sortkit/caps.hpp"
#include "sortkit/graph.hpp"

namespace sortkit::cli {

enum ExitCode : int {
  kPass = 0,
  kFalsified = 1,
  kInconclusive = 2,
  kInputError = 3,
};

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCapEnvPrefix = "SORTKIT_CAP_";

struct RunConfig {
  Caps caps;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";
};

/// Overrides caps from a JSON object such as {"fiber_q": 3}. Unknown keys
/// and non-positive values are ParseErrors.
Caps caps_from_json(const nlohmann::json& j, Caps base = {});
/// Applies SORTKIT_CAP_<NAME> environment variables.
Caps caps_from_env(Caps base = {});
nlohmann::json caps_to_json(const Caps& caps);

/// Proper-interval-labeled graph on 1..n: each vertex i reaches every
/// j in (i, b_i], with right ends b_i nondecreasing. Each extension is a
/// count of Bernoulli(density) draws taken from raw mt19937_64 output, so the
/// result for a seed is identical across standard libraries.
SimpleGraph generate_proper_interval(int n, double density, std::uint64_t seed, int max_vertices = 12);

/// Full command-line entry point; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sortkit::cli
