#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "momo/error.hpp"

namespace momo::cli {

using json = nlohmann::json;

inline constexpr int kConfigVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// invalid-config error pointing at the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : Error(ErrorCode::invalid_config, (pointer.empty() ? "/" : pointer) + ": " + what),
        pointer_(pointer.empty() ? "/" : std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

inline std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// Typed, key-tracking view of a JSON object; finish() rejects keys nobody read.
class ParamReader {
 public:
  ParamReader(const json& obj, std::string pointer) : obj_(obj), pointer_(std::move(pointer)) {
    if (!obj_.is_object()) throw ConfigError(pointer_, "expected an object");
  }

  const std::string& pointer() const noexcept { return pointer_; }
  std::string child(const std::string& key) const { return pointer_ + "/" + escape_pointer_token(key); }
  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    if (!obj_.contains(key)) throw ConfigError(child(key), "missing required key");
    seen_.insert(key);
    return obj_.at(key);
  }

  std::uint64_t u64(const std::string& key, std::uint64_t min = 0) {
    return as_u64(raw(key), child(key), min);
  }
  double real(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw ConfigError(child(key), "expected a number");
    return v.get<double>();
  }
  bool boolean(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_boolean()) throw ConfigError(child(key), "expected true or false");
    return v.get<bool>();
  }
  std::string text(const std::string& key, const std::vector<std::string>& allowed = {}) {
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError(child(key), "expected a string");
    std::string s = v.get<std::string>();
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw ConfigError(child(key), "unknown value '" + s + "' (expected one of: " + list + ")");
    }
    return s;
  }
  const json& array(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) throw ConfigError(child(key), "expected an array");
    return v;
  }
  ParamReader object(const std::string& key) { return ParamReader(raw(key), child(key)); }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.count(key)) throw ConfigError(child(key), "unknown key");
    }
  }

  static std::uint64_t as_u64(const json& v, const std::string& pointer, std::uint64_t min = 0) {
    std::uint64_t out = 0;
    if (v.is_number_unsigned()) {
      out = v.get<std::uint64_t>();
    } else if (v.is_number_integer()) {
      if (v.get<std::int64_t>() < 0) throw ConfigError(pointer, "expected a nonnegative integer");
      out = static_cast<std::uint64_t>(v.get<std::int64_t>());
    } else if (v.is_number_float()) {
      const double d = v.get<double>();
      if (!(d >= 0.0) || d != std::floor(d) || d >= 18446744073709551616.0) {
        throw ConfigError(pointer, "expected a nonnegative integer");
      }
      out = static_cast<std::uint64_t>(d);
    } else {
      throw ConfigError(pointer, "expected a nonnegative integer");
    }
    if (out < min) throw ConfigError(pointer, "must be >= " + std::to_string(min));
    return out;
  }

 private:
  const json& obj_;
  std::string pointer_;
  std::set<std::string> seen_;
};

/// {version, experiment_id, suite, params, output}.
struct ExperimentConfig {
  int version = kConfigVersion;
  std::string experiment_id;
  std::string suite;
  json params = json::object();  // after merging over the suite defaults
  std::string output;            // CSV path; empty = standard output

  json to_json() const {
    json j = {{"version", version}, {"experiment_id", experiment_id}, {"suite", suite}, {"params", params}};
    if (!output.empty()) j["output"] = output;
    return j;
  }
};

/// Top-level shape only; suite parameters are checked by the suite.
inline ExperimentConfig parse_config_envelope(const json& j) {
  ParamReader r(j, "");
  ExperimentConfig c;
  const std::uint64_t v = r.u64("version");
  if (v != static_cast<std::uint64_t>(kConfigVersion)) {
    throw ConfigError("/version", "unsupported config version " + std::to_string(v) + " (expected " +
                                      std::to_string(kConfigVersion) + ")");
  }
  c.experiment_id = r.text("experiment_id");
  if (c.experiment_id.empty()) throw ConfigError("/experiment_id", "must not be empty");
  c.suite = r.text("suite");
  if (r.has("params")) {
    c.params = r.raw("params");
    if (!c.params.is_object()) throw ConfigError("/params", "expected an object");
  }
  if (r.has("output")) c.output = r.text("output");
  r.finish();
  return c;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_config, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace momo::cli
