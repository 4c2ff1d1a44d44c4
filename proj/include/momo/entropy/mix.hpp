#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "momo/arith/arith_seq.hpp"
#include "momo/error.hpp"

namespace momo::entropy {

/// SplitMix64.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) from the upper 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// y(0..N-1) with P(y = 1) = p.
inline std::vector<std::uint8_t> bernoulli_stream(double p, std::uint64_t n, std::uint64_t seed) {
  require(p > 0.0 && p < 1.0, ErrorCode::invalid_argument, "p must lie in (0, 1)");
  Prng rng(seed);
  std::vector<std::uint8_t> y(n);
  for (auto& b : y) b = rng.uniform() < p ? 1 : 0;
  return y;
}

/// u(n) = lambda(n) where y(n-1) = 1, u(n) = -1 where y(n-1) = 0, n = 1..N.
inline arith::ArithSeq bernoulli_mix(const arith::ArithSeq& lambda, std::span<const std::uint8_t> mask) {
  const std::uint64_t n = mask.size();
  require_range(lambda.size(), n, "liouville sequence");
  require(lambda.is_signed(), ErrorCode::invalid_argument, "mix needs a sign-encoded sequence");
  std::vector<std::int8_t> u(n + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i) {
    require(lambda.sign(i) != 0, ErrorCode::invalid_argument, "mix needs a +-1 sequence");
    u[i] = mask[i - 1] ? lambda.sign(i) : std::int8_t{-1};
  }
  return arith::ArithSeq::adopt_signs(arith::SeqTag::custom, std::move(u));
}

inline arith::ArithSeq bernoulli_mix(const arith::ArithSeq& lambda, double p, std::uint64_t n,
                                     std::uint64_t seed) {
  const auto y = bernoulli_stream(p, n, seed);
  return bernoulli_mix(lambda, y);
}

/// (1/N) sum_{n=1}^{N} u(n) conj(v(n)).
inline std::complex<double> correlation(const arith::ArithSeq& u, const arith::ArithSeq& v, std::uint64_t n) {
  require(n >= 1, ErrorCode::invalid_argument, "N must be >= 1");
  require_range(u.size(), n, "u");
  require_range(v.size(), n, "v");
  if (u.is_signed() && v.is_signed()) {
    std::int64_t acc = 0;
    for (std::uint64_t i = 1; i <= n; ++i) acc += u.sign(i) * v.sign(i);
    return {static_cast<double>(acc) / static_cast<double>(n), 0.0};
  }
  std::complex<double> acc = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) acc += u(i) * std::conj(v(i));
  return acc / static_cast<double>(n);
}

/// #{n <= N : u(n) = v(n)} / N for +-1 sequences.
inline double sign_match_freq(const arith::ArithSeq& u, const arith::ArithSeq& v, std::uint64_t n) {
  require(n >= 1, ErrorCode::invalid_argument, "N must be >= 1");
  require_range(u.size(), n, "u");
  require_range(v.size(), n, "v");
  require(u.is_signed() && v.is_signed(), ErrorCode::invalid_argument, "sign match needs +-1 sequences");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    require(u.sign(i) != 0 && v.sign(i) != 0, ErrorCode::invalid_argument,
            "sign match needs +-1 values; zero at n = " + std::to_string(i));
    hits += u.sign(i) == v.sign(i);
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace momo::entropy
