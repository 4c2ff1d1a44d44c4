#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "momo/detail/fnv.hpp"
#include "momo/error.hpp"

namespace momo::detail {

/// base^exp, or nullopt past 2^127.
inline std::optional<unsigned __int128> checked_pow(std::uint64_t base, unsigned exp) {
  constexpr unsigned __int128 kCap = static_cast<unsigned __int128>(1) << 127;
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kCap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

/// floor(x^{1/b}).
inline std::uint64_t integer_root(unsigned __int128 x, unsigned b) {
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(x), 1.0L / b));
  auto fits = [&](std::uint64_t v) {
    const auto p = checked_pow(v, b);
    return p && *p <= x;
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

/// floor(c k^gamma); exact when c is an integer and gamma = a/b with b <= 16.
inline std::uint64_t power_cut(double c, double gamma, std::uint64_t k) {
  if (c == std::floor(c) && c < 4294967296.0) {
    for (unsigned b = 1; b <= 16; ++b) {
      const double a = gamma * b;
      if (a != std::floor(a) || a > 64) continue;
      const auto cb = checked_pow(static_cast<std::uint64_t>(c), b);
      const auto ka = checked_pow(k, static_cast<unsigned>(a));
      if (!cb || !ka) break;
      if (*ka != 0 && *cb > (static_cast<unsigned __int128>(1) << 127) / *ka) break;
      return integer_root(*cb * *ka, b);
    }
  }
  return static_cast<std::uint64_t>(std::floor(static_cast<long double>(c) *
                                               std::pow(static_cast<long double>(k), gamma)));
}

}  // namespace momo::detail

namespace momo::averages {

/// Cuts 0 = b_0 < b_1 < ... < b_K.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::uint64_t> cuts) : cuts_(std::move(cuts)) {
    require(cuts_.size() >= 2, ErrorCode::invalid_argument, "a partition needs at least one block");
    require(cuts_[0] == 0, ErrorCode::invalid_argument, "b_0 must be 0");
    for (std::size_t k = 1; k < cuts_.size(); ++k) {
      require(cuts_[k] > cuts_[k - 1], ErrorCode::invalid_argument, "cuts must increase strictly");
    }
    suffix_min_.resize(count());
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t k = count(); k-- > 0;) {
      m = std::min(m, gap(k));
      suffix_min_[k] = m;
    }
  }

  const std::vector<std::uint64_t>& cuts() const noexcept { return cuts_; }
  std::size_t count() const noexcept { return cuts_.size() - 1; }
  std::uint64_t begin(std::size_t k) const { return cuts_[k]; }
  std::uint64_t end(std::size_t k) const { return cuts_[k + 1]; }
  std::uint64_t gap(std::size_t k) const { return cuts_[k + 1] - cuts_[k]; }
  std::uint64_t total() const noexcept { return cuts_.back(); }

  std::uint64_t min_gap() const { return suffix_min_.front(); }
  std::uint64_t max_gap() const {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < count(); ++k) m = std::max(m, gap(k));
    return m;
  }
  /// min_{j >= k} (b_{j+1} - b_j); nondecreasing in k, diverges along a valid family.
  std::uint64_t min_gap_from(std::size_t k) const { return suffix_min_.at(k); }

  std::uint64_t hash() const {
    momo::detail::Fnv1a h;
    for (std::uint64_t b : cuts_) h.value(b);
    return h.digest();
  }

 private:
  std::vector<std::uint64_t> cuts_;
  std::vector<std::uint64_t> suffix_min_;
};


struct PowerCuts {
  double c = 1.0;
  double gamma = 2.0;
};
struct LinearGrowingCuts {
  std::uint64_t c = 1;
};

/// b_k = floor(c k^gamma), deduplicated, while b_k <= limit.
inline BlockPartition make_cuts(const PowerCuts& kind, std::uint64_t limit) {
  require(kind.gamma > 1.0, ErrorCode::gaps_not_divergent, "POWER cuts need gamma > 1");
  require(kind.c >= 1.0, ErrorCode::invalid_argument, "POWER cuts need c >= 1");
  require(limit >= 1, ErrorCode::invalid_argument, "cut limit must be >= 1");
  std::vector<std::uint64_t> cuts;
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t b = detail::power_cut(kind.c, kind.gamma, k);
    if (b > limit) break;
    if (cuts.empty() || b != cuts.back()) cuts.push_back(b);
  }
  return BlockPartition(std::move(cuts));
}

/// b_{k+1} - b_k = c (k+1), while b_k <= limit.
inline BlockPartition make_cuts(const LinearGrowingCuts& kind, std::uint64_t limit) {
  require(kind.c >= 1, ErrorCode::invalid_argument, "LINEAR_GROWING cuts need c >= 1");
  require(limit >= kind.c, ErrorCode::invalid_argument, "cut limit below the first gap");
  std::vector<std::uint64_t> cuts{0};
  for (std::uint64_t gap = kind.c; limit - cuts.back() >= gap; gap += kind.c) {
    cuts.push_back(cuts.back() + gap);
  }
  return BlockPartition(std::move(cuts));
}

}  // namespace momo::averages
