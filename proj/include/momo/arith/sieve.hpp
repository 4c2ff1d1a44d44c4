#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "momo/arith/arith_seq.hpp"
#include "momo/error.hpp"

namespace momo::arith {

struct SieveOptions {
  // Ranges above this length switch from the linear sieve to segments.
  std::uint64_t segment_threshold = 10'000'000;
  std::uint64_t segment_size = std::uint64_t{1} << 20;
};

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace detail {

inline std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

// Omega(n) and the squarefree flag for n in [lo, hi), using every prime power
// below hi built from `base` (all primes <= sqrt(hi - 1)).
inline void factor_segment(std::uint64_t lo, std::uint64_t hi,
                           const std::vector<std::uint64_t>& base,
                           std::vector<std::uint64_t>& rem,
                           std::uint8_t* omega, std::uint8_t* squarefree) {
  const std::uint64_t len = hi - lo;
  rem.resize(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    rem[i] = lo + i;
    omega[i] = 0;
    squarefree[i] = 1;
  }
  for (std::uint64_t p : base) {
    if (p * p >= hi) break;
    std::uint64_t pk = p;
    int e = 1;
    while (true) {
      for (std::uint64_t m = (lo + pk - 1) / pk * pk; m < hi; m += pk) {
        const std::uint64_t i = m - lo;
        rem[i] /= p;
        ++omega[i];
        if (e == 2) squarefree[i] = 0;
      }
      if (pk > (hi - 1) / p) break;
      pk *= p;
      ++e;
    }
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    if (rem[i] > 1) ++omega[i];
  }
}

struct OmegaTable {
  std::vector<std::uint8_t> omega;       // index n, 0..N
  std::vector<std::uint8_t> squarefree;  // index n, 0..N
};

inline OmegaTable linear_omega(std::uint64_t n) {
  OmegaTable t{std::vector<std::uint8_t>(n + 1, 0), std::vector<std::uint8_t>(n + 1, 1)};
  std::vector<char> composite(n + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      t.omega[i] = 1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > n) break;
      composite[ip] = 1;
      t.omega[ip] = static_cast<std::uint8_t>(t.omega[i] + 1);
      if (i % p == 0) {
        t.squarefree[ip] = 0;
        break;
      }
      t.squarefree[ip] = t.squarefree[i];
    }
  }
  return t;
}

inline OmegaTable omega_table(std::uint64_t n, const SieveOptions& opts) {
  require(n >= 1, ErrorCode::invalid_argument, "sieve length N must be >= 1");
  if (n <= opts.segment_threshold) return linear_omega(n);
  OmegaTable t{std::vector<std::uint8_t>(n + 1, 0), std::vector<std::uint8_t>(n + 1, 1)};
  const auto base = small_primes(isqrt(n));
  std::vector<std::uint64_t> rem;
  for (std::uint64_t lo = 1; lo <= n; lo += opts.segment_size) {
    const std::uint64_t hi = std::min(n + 1, lo + opts.segment_size);
    factor_segment(lo, hi, base, rem, t.omega.data() + lo, t.squarefree.data() + lo);
  }
  return t;
}

}  // namespace detail

/// Eratosthenes; entry n is true iff n is prime. Segmented above the threshold.
inline std::vector<bool> prime_sieve(std::uint64_t n, const SieveOptions& opts = {}) {
  std::vector<bool> is_prime(n + 1, false);
  if (n < 2) return is_prime;
  if (n <= opts.segment_threshold) {
    std::vector<char> composite(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
      if (composite[i]) continue;
      is_prime[i] = true;
      for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return is_prime;
  }
  const auto base = detail::small_primes(isqrt(n));
  std::vector<char> seg;
  for (std::uint64_t lo = 2; lo <= n; lo += opts.segment_size) {
    const std::uint64_t hi = std::min(n + 1, lo + opts.segment_size);
    seg.assign(hi - lo, 1);
    for (std::uint64_t p : base) {
      if (p * p >= hi) break;
      const std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j < hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t i = lo; i < hi; ++i) is_prime[i] = seg[i - lo] != 0;
  }
  return is_prime;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n, const SieveOptions& opts = {}) {
  const auto flags = prime_sieve(n, opts);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (flags[i]) primes.push_back(i);
  }
  return primes;
}

/// Smallest-prime-factor table over [1..N], built by a linear sieve.
class FactorTable {
 public:
  explicit FactorTable(std::uint64_t n) : spf_(n + 1, 0) {
    require(n >= 1, ErrorCode::invalid_argument, "factor table needs N >= 1");
    require(n <= 0xFFFF'FFFFu, ErrorCode::invalid_argument, "factor table limited to 32-bit N");
    spf_[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes_.push_back(static_cast<std::uint32_t>(i));
      }
      for (std::uint32_t p : primes_) {
        if (p > spf_[i] || i * p > n) break;
        spf_[i * p] = p;
      }
    }
  }

  std::uint64_t size() const noexcept { return spf_.size() - 1; }
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  std::vector<std::pair<std::uint32_t, int>> factorize(std::uint64_t n) const {
    std::vector<std::pair<std::uint32_t, int>> out;
    while (n > 1) {
      const std::uint32_t p = spf_[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

  int omega(std::uint64_t n) const {
    int total = 0;
    for (const auto& [p, e] : factorize(n)) total += e;
    return total;
  }

 private:
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Omega(n) (prime factors with multiplicity) for 0 <= n <= N; entry 0 is 0.
inline std::vector<std::uint8_t> sieve_omega(std::uint64_t n, const SieveOptions& opts = {}) {
  return detail::omega_table(n, opts).omega;
}

inline ArithSeq sieve_mobius(std::uint64_t n, const SieveOptions& opts = {}) {
  auto t = detail::omega_table(n, opts);
  std::vector<std::int8_t> mu(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (t.squarefree[k]) mu[k] = (t.omega[k] & 1) ? -1 : 1;
  }
  return ArithSeq::adopt_signs(SeqTag::mobius, std::move(mu));
}

inline ArithSeq sieve_liouville(std::uint64_t n, const SieveOptions& opts = {}) {
  auto omega = sieve_omega(n, opts);
  std::vector<std::int8_t> lambda(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) lambda[k] = (omega[k] & 1) ? -1 : 1;
  return ArithSeq::adopt_signs(SeqTag::liouville, std::move(lambda));
}

/// Binary digit positions A, given as a finite set or the complement of one.
struct DigitSet {
  std::set<unsigned> positions;
  bool complement = false;

  static DigitSet all() { return DigitSet{{}, true}; }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (unsigned p : positions) {
      if (p < 64) m |= std::uint64_t{1} << p;
    }
    return complement ? ~m : m;
  }
};

/// x_A(n): parity of the binary digits of n at positions in A.
inline int digit_parity(std::uint64_t n, const DigitSet& a) {
  return std::popcount(n & a.mask()) & 1;
}

}  // namespace momo::arith
