#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "momo/error.hpp"
#include "momo/symbolic/morse.hpp"

namespace momo::symbolic {

/// Odometer on prod Z/lambda_t Z, described by its tower heights n_t.
class Odometer {
 public:
  /// `scale` starts with n_0 = 1; `unbounded` marks a finite realization of
  /// an infinite sequence.
  explicit Odometer(std::vector<std::uint64_t> scale, bool unbounded = false)
      : scale_(std::move(scale)), unbounded_(unbounded) {
    require(!scale_.empty() && scale_[0] == 1, ErrorCode::invalid_tower, "n_0 must be 1");
    for (std::size_t t = 1; t < scale_.size(); ++t) {
      require(scale_[t] > scale_[t - 1], ErrorCode::invalid_tower, "n_t must increase strictly");
      require(scale_[t] % scale_[t - 1] == 0, ErrorCode::invalid_tower, "n_t must divide n_{t+1}");
    }
  }

  /// Scales n_0..n_{t_max} of a block product (bounded by the realized depth).
  static Odometer from_blocks(const BlockProduct& p, std::size_t t_max) {
    const std::size_t top = std::min(t_max, p.depth());
    std::vector<std::uint64_t> scale{1};
    for (std::size_t t = 0; t < top; ++t) {
      const std::uint64_t len = p.block(t).size();
      require(scale.back() <= UINT64_MAX / len, ErrorCode::invalid_argument,
              "odometer scale overflows 64 bits");
      scale.push_back(scale.back() * len);
    }
    return Odometer(std::move(scale), p.repeat_last() || p.depth() > top);
  }

  const std::vector<std::uint64_t>& scale() const noexcept { return scale_; }
  std::size_t realized_depth() const noexcept { return scale_.size() - 1; }
  bool unbounded() const noexcept { return unbounded_; }

 private:
  std::vector<std::uint64_t> scale_;
  bool unbounded_ = false;
};

/// Modular inverse of s mod n by the extended Euclidean algorithm.
inline std::optional<std::uint64_t> mod_inverse(std::uint64_t s, std::uint64_t n) {
  if (n == 1) return 0;
  __int128 old_r = static_cast<__int128>(s % n), r = n;
  __int128 old_x = 1, x = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_x - quot * x;
    old_x = x;
    x = tmp;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_x % static_cast<__int128>(n);
  if (inv < 0) inv += n;
  return static_cast<std::uint64_t>(inv);
}

/// F-norm on Z_n: ||i|| = min(i, n - i).
inline std::uint64_t f_norm(std::uint64_t i, std::uint64_t n) {
  i %= n;
  return std::min(i, n - i);
}

struct RootRotation {
  std::uint64_t residue = 0;  // b_t = r / s in Z_{n_t}
  std::uint64_t margin = 0;   // min_{0 <= j < k} ||b_t - j n_t / k||
};

/// The rotation b_t by which the s-th root of T^r moves the levels of the
/// n_t-tower, together with its distance from the k-th roots j n_t / k.
inline RootRotation root_rotation(std::uint64_t r, std::uint64_t s, std::uint64_t n_t,
                                  std::uint64_t k) {
  require(r >= 1 && s >= 1 && n_t >= 1 && k >= 1, ErrorCode::invalid_argument,
          "r, s, n_t, k must be positive");
  if (n_t % k != 0) {
    throw Error(ErrorCode::invalid_tower, "k = " + std::to_string(k) + " does not divide n_t");
  }
  const auto inv = mod_inverse(s, n_t);
  if (!inv) {
    throw Error(ErrorCode::no_inverse, "gcd(s, n_t) != 1 for s = " + std::to_string(s));
  }
  RootRotation out;
  out.residue = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r % n_t) * *inv % n_t);
  const std::uint64_t step = n_t / k;
  out.margin = f_norm(out.residue, n_t);
  for (std::uint64_t j = 1; j < k; ++j) {
    const std::uint64_t target = j * step;
    const std::uint64_t diff = out.residue >= target ? out.residue - target
                                                      : out.residue + n_t - target;
    out.margin = std::min(out.margin, f_norm(diff, n_t));
  }
  return out;
}

struct RationalSpectrum {
  std::vector<std::uint64_t> primes;  // ascending
  bool truncated = false;             // more of the scale exists beyond t_max
};

/// Spec(T) = {p prime : p | n_t for some t >= 1}, over t <= t_max.
inline RationalSpectrum spec_rational(const Odometer& odo, std::size_t t_max) {
  RationalSpectrum out;
  const auto& scale = odo.scale();
  const std::size_t top = std::min(t_max, odo.realized_depth());
  std::set<std::uint64_t> primes;
  for (std::size_t t = 1; t <= top; ++t) {
    // n_t | n_{t+1}, so the ratios carry every new prime
    std::uint64_t ratio = scale[t] / scale[t - 1];
    for (std::uint64_t d = 2; d * d <= ratio; ++d) {
      if (ratio % d) continue;
      primes.insert(d);
      while (ratio % d == 0) ratio /= d;
    }
    if (ratio > 1) primes.insert(ratio);
  }
  out.primes.assign(primes.begin(), primes.end());
  out.truncated = odo.unbounded() || odo.realized_depth() > top;
  return out;
}

}  // namespace momo::symbolic
