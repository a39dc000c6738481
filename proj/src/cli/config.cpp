#include <cctype>
#include <cstdlib>
#include <string>

#include "sortkit/cli.hpp"
#include "sortkit/errors.hpp"

namespace sortkit::cli {

namespace {

template <typename Fn>
void for_each_cap(Caps& c, Fn&& fn) {
  fn("fiber_q", c.fiber_q);
  fn("kernel_degree", c.kernel_degree);
  fn("generators", c.generators);
  fn("cover_vertices", c.cover_vertices);
  fn("power_k", c.power_k);
  fn("basis_budget", c.basis_budget);
  fn("lq_greedy", c.lq_greedy);
  fn("lq_exhaustive", c.lq_exhaustive);
  fn("labeling_vertices", c.labeling_vertices);
  fn("generator_vertices", c.generator_vertices);
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

template <typename T>
void assign_positive(T& field, long long value, const std::string& name) {
  if (value <= 0) throw ParseError("cap '" + name + "' must be positive");
  field = static_cast<T>(value);
}

}  // namespace

Caps caps_from_json(const nlohmann::json& j, Caps base) {
  if (!j.is_object()) throw ParseError("caps must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for_each_cap(base, [&](const char* name, auto& field) {
      if (key != name) return;
      known = true;
      if (!value.is_number_integer()) throw ParseError("cap '" + key + "' must be an integer");
      assign_positive(field, value.get<long long>(), key);
    });
    if (!known) throw ParseError("unknown cap '" + key + "'");
  }
  return base;
}

Caps caps_from_env(Caps base) {
  for_each_cap(base, [](const char* name, auto& field) {
    const std::string var = std::string(kCapEnvPrefix) + upper(name);
    const char* raw = std::getenv(var.c_str());
    if (raw == nullptr) return;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0') throw ParseError(var + " is not an integer");
    assign_positive(field, v, name);
  });
  return base;
}

nlohmann::json caps_to_json(const Caps& caps) {
  nlohmann::json j = nlohmann::json::object();
  Caps copy = caps;
  for_each_cap(copy, [&](const char* name, auto& field) { j[name] = field; });
  return j;
}

}  // namespace sortkit::cli
