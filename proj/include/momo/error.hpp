#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace momo {

enum class ErrorCode {
  invalid_argument,
  insufficient_range,
  unsupported_modulus,
  needs_more_blocks,
  not_a_fixed_point_seed,
  no_inverse,
  invalid_tower,
  gaps_not_divergent,
  witness_exhausted,
  invalid_config,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::insufficient_range: return "insufficient-range";
    case ErrorCode::unsupported_modulus: return "unsupported-modulus";
    case ErrorCode::needs_more_blocks: return "needs-more-blocks";
    case ErrorCode::not_a_fixed_point_seed: return "not-a-fixed-point-seed";
    case ErrorCode::no_inverse: return "no-inverse";
    case ErrorCode::invalid_tower: return "invalid-tower";
    case ErrorCode::gaps_not_divergent: return "gaps-not-divergent";
    case ErrorCode::witness_exhausted: return "witness-exhausted";
    case ErrorCode::invalid_config: return "invalid-config";
  }
  return "unknown";
}

/// Library-wide exception. `required()` carries the length or depth that
/// would have satisfied the operation for the range/depth error kinds.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::uint64_t> required = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        required_(required) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::uint64_t> required() const noexcept { return required_; }

 private:
  ErrorCode code_;
  std::optional<std::uint64_t> required_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

inline void require_range(std::uint64_t have, std::uint64_t need,
                          std::string_view what) {
  if (have < need) {
    throw Error(ErrorCode::insufficient_range,
                std::string(what) + " realized to " + std::to_string(have) +
                    ", need " + std::to_string(need),
                need);
  }
}

}  // namespace momo
