#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "momo/error.hpp"

namespace momo::arith {

enum class SeqTag { mobius, liouville, character, twist, custom };

constexpr std::string_view to_string(SeqTag tag) {
  switch (tag) {
    case SeqTag::mobius: return "mobius";
    case SeqTag::liouville: return "liouville";
    case SeqTag::character: return "character";
    case SeqTag::twist: return "twist";
    case SeqTag::custom: return "custom";
  }
  return "custom";
}

/// Finite realization of an arithmetic function u on [1..N].
///
/// Values are 1-based: `seq(n)` is u(n) for 1 <= n <= N. Position 0 is
/// stored as 0 so that sums starting at n = 0 (block sums with b_0 = 0)
/// pick up no contribution from it. Functions taking values in {-1,0,+1}
/// use a one-byte encoding; anything else is stored as complex<double>.
class ArithSeq {
 public:
  ArithSeq() = default;

  /// `values[i]` is u(i+1).
  static ArithSeq from_signs(SeqTag tag, std::span<const std::int8_t> values) {
    ArithSeq seq;
    seq.tag_ = tag;
    seq.signs_.reserve(values.size() + 1);
    seq.signs_.push_back(0);
    for (std::int8_t v : values) {
      require(v >= -1 && v <= 1, ErrorCode::invalid_argument,
              "sign-encoded value outside {-1,0,+1}");
      require(!(tag == SeqTag::liouville && v == 0), ErrorCode::invalid_argument,
              "liouville-tagged sequence must be +-1 valued");
      seq.signs_.push_back(v);
    }
    return seq;
  }

  /// Adopts a buffer already laid out as [u(0)=0, u(1), ..., u(N)].
  static ArithSeq adopt_signs(SeqTag tag, std::vector<std::int8_t> with_origin) {
    require(!with_origin.empty() && with_origin[0] == 0, ErrorCode::invalid_argument,
            "sign buffer must start with u(0) = 0");
    ArithSeq seq;
    seq.tag_ = tag;
    seq.signs_ = std::move(with_origin);
    return seq;
  }

  /// `values[i]` is u(i+1); every value must lie in the closed unit disc.
  static ArithSeq from_complex(SeqTag tag, std::span<const std::complex<double>> values) {
    ArithSeq seq;
    seq.tag_ = tag;
    seq.complex_.reserve(values.size() + 1);
    seq.complex_.emplace_back(0.0, 0.0);
    for (const auto& v : values) {
      require(std::abs(v) <= 1.0 + 1e-12, ErrorCode::invalid_argument,
              "arithmetic function value outside the unit disc");
      seq.complex_.push_back(v);
    }
    return seq;
  }

  SeqTag tag() const noexcept { return tag_; }

  /// N, the largest n with a realized value.
  std::uint64_t size() const noexcept {
    const auto stored = is_signed() ? signs_.size() : complex_.size();
    return stored == 0 ? 0 : stored - 1;
  }

  bool is_signed() const noexcept { return !signs_.empty(); }

  /// True when every realized value is +-1 (the quadrant and sign-match statistics need this).
  bool is_unimodular_sign() const noexcept {
    if (!is_signed()) return false;
    for (std::size_t n = 1; n < signs_.size(); ++n) {
      if (signs_[n] == 0) return false;
    }
    return true;
  }

  std::complex<double> operator()(std::uint64_t n) const {
    if (is_signed()) return {static_cast<double>(signs_[n]), 0.0};
    return complex_[n];
  }

  std::int8_t sign(std::uint64_t n) const { return signs_[n]; }

  /// Sign buffer including the u(0) slot; empty for complex-valued sequences.
  std::span<const std::int8_t> signs_with_origin() const noexcept { return signs_; }

 private:
  SeqTag tag_ = SeqTag::custom;
  std::vector<std::int8_t> signs_;
  std::vector<std::complex<double>> complex_;
};

}  // namespace momo::arith
