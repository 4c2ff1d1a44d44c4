#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "momo/arith/arith_seq.hpp"
#include "momo/arith/characters.hpp"
#include "momo/arith/sieve.hpp"
#include "momo/error.hpp"

namespace momo::arith {

/// Sum over primes p <= M (ascending) of (1 - Re(u(p) conj(v(p)))) / p, where
/// `v` is any callable p -> complex.
template <class Twist>
double pretentious_distance_sq(const ArithSeq& u, Twist&& v, std::span<const std::uint64_t> primes) {
  double acc = 0.0;
  for (std::uint64_t p : primes) {
    acc += (1.0 - std::real(u(p) * std::conj(v(p)))) / static_cast<double>(p);
  }
  return acc;
}

/// D(u, v; M).
inline double pretentious_distance(const ArithSeq& u, const ArithSeq& v, std::uint64_t m) {
  require(m >= 1, ErrorCode::invalid_argument, "M must be >= 1");
  require_range(u.size(), m, "u");
  require_range(v.size(), m, "v");
  const auto primes = primes_upto(m);
  return std::sqrt(pretentious_distance_sq(
      u, [&v](std::uint64_t p) { return v(p); }, primes));
}

/// Q = min(log^{1/125} M, log^5 H) with natural logarithms.
inline double mrt_q_bound(std::uint64_t m, std::uint64_t h) {
  const double a = std::pow(std::log(static_cast<double>(m)), 1.0 / 125.0);
  const double b = std::pow(std::log(static_cast<double>(h)), 5.0);
  return std::min(a, b);
}

struct MrtOptions {
  // Number of t-grid points on [-M, M]; rounded up to an odd count so t = 0 is sampled.
  std::uint64_t grid_points = 10'000;
  std::optional<std::uint32_t> q_override;
  std::uint32_t q_max = kDefaultQMax;
};

struct MrtResult {
  double value = std::numeric_limits<double>::infinity();  // D^2 at the argmin
  double t = 0.0;
  std::uint32_t q = 1;
  std::size_t character_index = 0;  // position in dirichlet_characters(q)
  std::uint32_t q_bound = 1;        // largest modulus searched
  std::uint64_t grid_size = 0;
};

/// Grid minimum of D(u, n -> xi(n) n^{it}; M)^2 over |t| <= M and all
/// characters xi of modulus q <= Q. This is a lower-fidelity surrogate for
/// the true infimum; ties keep the first point in (t, q, character) order.
inline MrtResult mrt_infimum(const ArithSeq& u, std::uint64_t m, std::uint64_t h,
                             const MrtOptions& opts = {}) {
  require(opts.grid_points > 0, ErrorCode::invalid_argument, "grid resolution must be positive");
  require(h >= 10 && h <= m, ErrorCode::invalid_argument, "need 10 <= H <= M");
  require_range(u.size(), m, "u");

  MrtResult best;
  best.q_bound = opts.q_override
                     ? *opts.q_override
                     : std::max<std::uint32_t>(1, static_cast<std::uint32_t>(mrt_q_bound(m, h)));
  require(best.q_bound >= 1, ErrorCode::invalid_argument, "Q must be >= 1");

  std::vector<std::vector<DirichletCharacter>> families;
  for (std::uint32_t q = 1; q <= best.q_bound; ++q) {
    families.push_back(dirichlet_characters(q, opts.q_max));
  }

  const auto primes = primes_upto(m);
  std::vector<double> log_p(primes.size());
  std::vector<std::complex<double>> u_p(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    log_p[i] = std::log(static_cast<double>(primes[i]));
    u_p[i] = u(primes[i]);
  }

  const std::uint64_t half = std::max<std::uint64_t>(1, opts.grid_points / 2);
  best.grid_size = 2 * half + 1;
  std::vector<std::complex<double>> rot(primes.size());
  for (std::uint64_t g = 0; g <= 2 * half; ++g) {
    const double t = static_cast<double>(m) *
                     (static_cast<double>(g) - static_cast<double>(half)) /
                     static_cast<double>(half);
    // u(p) * conj(p^{it})
    for (std::size_t i = 0; i < primes.size(); ++i) {
      rot[i] = u_p[i] * std::polar(1.0, -t * log_p[i]);
    }
    for (std::uint32_t q = 1; q <= best.q_bound; ++q) {
      const auto& chars = families[q - 1];
      for (std::size_t c = 0; c < chars.size(); ++c) {
        double acc = 0.0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
          acc += (1.0 - std::real(rot[i] * std::conj(chars[c](primes[i])))) /
                 static_cast<double>(primes[i]);
        }
        if (acc < best.value) {
          best.value = acc;
          best.t = t;
          best.q = q;
          best.character_index = c;
        }
      }
    }
  }
  return best;
}

}  // namespace momo::arith
