#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "momo/arith.hpp"
#include "oracles.hpp"

namespace arith = momo::arith;
using momo::ErrorCode;
using momo::testing::trial_factor;
using momo::testing::trial_liouville;
using momo::testing::trial_mobius;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << momo::to_string(code);
  } catch (const momo::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Sieve, MobiusSmallValues) {
  const auto mu = arith::sieve_mobius(12);
  EXPECT_EQ(mu.sign(1), 1);
  EXPECT_EQ(mu.sign(12), 0);
  const int first_ten[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(mu.sign(n), first_ten[n - 1]) << n;
    EXPECT_EQ(mu.sign(n), trial_mobius(n)) << n;
  }
  EXPECT_EQ(mu.sign(0), 0);
  EXPECT_EQ(mu.tag(), arith::SeqTag::mobius);
}

TEST(Sieve, LiouvilleAndOmega) {
  const auto lambda = arith::sieve_liouville(100);
  EXPECT_EQ(lambda.sign(1), 1);
  EXPECT_EQ(lambda.sign(8), -1);
  EXPECT_TRUE(lambda.is_unimodular_sign());

  const auto omega = arith::sieve_omega(1000);
  EXPECT_EQ(omega[1], 0);
  EXPECT_EQ(omega[12], 3);
  const auto primes = arith::prime_sieve(1000);
  for (int n = 2; n <= 1000; ++n) {
    if (primes[n]) EXPECT_EQ(omega[n], 1) << n;
    EXPECT_EQ(omega[n], trial_factor(n).omega) << n;
  }
}

TEST(Sieve, ZeroLengthRejected) {
  expect_error(ErrorCode::invalid_argument, [] { arith::sieve_mobius(0); });
  expect_error(ErrorCode::invalid_argument, [] { arith::sieve_liouville(0); });
  expect_error(ErrorCode::invalid_argument, [] { arith::sieve_omega(0); });
}

TEST(Sieve, MatchesTrialDivisionOracle) {
  constexpr std::uint64_t n = 100'000;
  const auto mu = arith::sieve_mobius(n);
  const auto lambda = arith::sieve_liouville(n);
  int mismatches = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mismatches += mu.sign(k) != trial_mobius(k);
    mismatches += lambda.sign(k) != trial_liouville(k);
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Sieve, SegmentedPathAgreesWithLinear) {
  // Force tiny segments so every code path (prime powers crossing segment
  // boundaries, large leftover prime) is exercised at test scale.
  const arith::SieveOptions segmented{.segment_threshold = 100, .segment_size = 97};
  constexpr std::uint64_t n = 50'000;
  const auto mu_lin = arith::sieve_mobius(n);
  const auto mu_seg = arith::sieve_mobius(n, segmented);
  const auto om_lin = arith::sieve_omega(n);
  const auto om_seg = arith::sieve_omega(n, segmented);
  const auto pr_lin = arith::prime_sieve(n);
  const auto pr_seg = arith::prime_sieve(n, segmented);
  for (std::uint64_t k = 1; k <= n; ++k) {
    ASSERT_EQ(mu_lin.sign(k), mu_seg.sign(k)) << k;
    ASSERT_EQ(om_lin[k], om_seg[k]) << k;
    ASSERT_EQ(pr_lin[k], pr_seg[k]) << k;
  }
}

TEST(PrimeSieve, Counts) {
  const auto ten = arith::primes_upto(10);
  EXPECT_EQ(ten, (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(arith::primes_upto(1).empty());
  const auto flags = arith::prime_sieve(100'000);
  int count = 0, trial_count = 0;
  for (std::uint64_t k = 0; k <= 100'000; ++k) {
    count += flags[k];
    trial_count += momo::testing::trial_is_prime(k);
  }
  EXPECT_EQ(count, trial_count);
  EXPECT_EQ(count, 9592);
}

TEST(FactorTable, SmallestPrimeFactor) {
  const arith::FactorTable table(10'000);
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const std::uint32_t p = table.spf(n);
    ASSERT_EQ(n % p, 0u);
    for (std::uint32_t d = 2; d < p; ++d) ASSERT_NE(n % d, 0u) << n;
    if (momo::testing::trial_is_prime(n)) {
      EXPECT_EQ(p, n);
    }
    EXPECT_EQ(table.omega(n), trial_factor(n).omega);
  }
}

TEST(ArithProperties, Multiplicativity) {
  constexpr std::uint64_t n = 100'000;
  const auto mu = arith::sieve_mobius(n);
  const auto lambda = arith::sieve_liouville(n);
  std::mt19937_64 rng(20240611);
  int coprime_checked = 0;
  while (coprime_checked < 10'000) {
    const std::uint64_t a = 1 + rng() % 1000;
    const std::uint64_t b = 1 + rng() % (n / a);
    ASSERT_EQ(lambda.sign(a * b), lambda.sign(a) * lambda.sign(b));
    if (std::gcd(a, b) != 1) continue;
    ASSERT_EQ(mu.sign(a * b), mu.sign(a) * mu.sign(b)) << a << " " << b;
    ++coprime_checked;
  }
}

TEST(ArithProperties, DivisorSumOfMobius) {
  constexpr std::uint64_t n = 10'000;
  const auto mu = arith::sieve_mobius(n);
  std::vector<int> sums(n + 1, 0);
  for (std::uint64_t d = 1; d <= n; ++d) {
    for (std::uint64_t m = d; m <= n; m += d) sums[m] += mu.sign(d);
  }
  for (std::uint64_t k = 1; k <= n; ++k) ASSERT_EQ(sums[k], k == 1 ? 1 : 0) << k;
}

TEST(ArithProperties, LiouvilleEqualsMobiusOnSquarefree) {
  constexpr std::uint64_t n = 100'000;
  const auto mu = arith::sieve_mobius(n);
  const auto lambda = arith::sieve_liouville(n);
  const arith::FactorTable table(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    bool square_factor = false;
    for (const auto& [p, e] : table.factorize(k)) square_factor |= e > 1;
    ASSERT_EQ(mu.sign(k) == 0, square_factor) << k;
    if (!square_factor) ASSERT_EQ(mu.sign(k), lambda.sign(k)) << k;
  }
}

TEST(DigitParity, Examples) {
  EXPECT_EQ(arith::digit_parity(3, arith::DigitSet::all()), 0);
  EXPECT_EQ(arith::digit_parity(7, arith::DigitSet::all()), 1);
  const arith::DigitSet empty{};
  const arith::DigitSet low{{0}, false};
  for (std::uint64_t n = 0; n < 200; ++n) {
    EXPECT_EQ(arith::digit_parity(n, empty), 0);
    EXPECT_EQ(arith::digit_parity(n, low), static_cast<int>(n % 2));
    EXPECT_EQ(arith::digit_parity(n, arith::DigitSet::all()), momo::testing::popcount_parity(n));
  }
  // complement of {0}: all digits except the lowest
  const arith::DigitSet not_low{{0}, true};
  EXPECT_EQ(arith::digit_parity(3, not_low), 1);
}

namespace {

// Brute force: all homomorphisms (Z/q)^* -> C^*, found by trying every
// assignment of phi(q)-th roots of unity to all units and keeping the
// multiplicative ones. Only viable for tiny q.
std::size_t brute_force_character_count(std::uint32_t q) {
  std::vector<std::uint32_t> units;
  for (std::uint32_t n = 1; n <= q; ++n) {
    if (std::gcd(n % q, q) == 1) units.push_back(n % q);
  }
  const std::size_t phi = units.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < phi; ++i) total *= phi;
  std::size_t found = 0;
  std::vector<std::size_t> exps(phi);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < phi; ++i) {
      exps[i] = c % phi;
      c /= phi;
    }
    bool ok = true;
    for (std::size_t i = 0; i < phi && ok; ++i) {
      for (std::size_t j = 0; j < phi && ok; ++j) {
        const std::uint32_t prod = units[i] * units[j] % q;
        const auto k = static_cast<std::size_t>(
            std::find(units.begin(), units.end(), prod) - units.begin());
        ok = (exps[i] + exps[j]) % phi == exps[k];
      }
    }
    found += ok;
  }
  return found;
}

}  // namespace

TEST(Characters, SmallModuli) {
  const auto one = arith::dirichlet_characters(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].principal);
  EXPECT_EQ(one[0](17), std::complex<double>(1.0, 0.0));

  const auto three = arith::dirichlet_characters(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_TRUE(three[0].principal);
  EXPECT_FALSE(three[1].principal);
  EXPECT_EQ(three[1].table[0], std::complex<double>(0.0, 0.0));
  EXPECT_EQ(three[1].table[1], std::complex<double>(1.0, 0.0));
  EXPECT_EQ(three[1].table[2], std::complex<double>(-1.0, 0.0));

  const auto eight = arith::dirichlet_characters(8);
  ASSERT_EQ(eight.size(), 4u);
  for (const auto& chi : eight) {
    for (const auto& v : chi.table) EXPECT_EQ(v.imag(), 0.0);
  }
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 12u}) {
    EXPECT_EQ(arith::dirichlet_characters(q).size(), brute_force_character_count(q)) << q;
  }
  expect_error(ErrorCode::unsupported_modulus, [] { arith::dirichlet_characters(101); });
  EXPECT_EQ(arith::dirichlet_characters(101, 200).size(), 100u);
}

TEST(Characters, TableInvariantsAndOrthogonality) {
  for (std::uint32_t q = 1; q <= 60; ++q) {
    const auto chars = arith::dirichlet_characters(q);
    std::uint32_t phi = 0;
    for (std::uint32_t n = 0; n < q; ++n) phi += std::gcd(n, q) == 1;
    ASSERT_EQ(chars.size(), phi) << q;
    for (const auto& chi : chars) {
      for (std::uint32_t n = 0; n < q; ++n) {
        const bool unit = std::gcd(n, q) == 1;
        EXPECT_EQ(chi.table[n] == std::complex<double>(0.0, 0.0), !unit);
        if (unit) {
          // root of unity of order dividing phi(q)
          std::complex<double> pw(1.0, 0.0);
          for (std::uint32_t i = 0; i < phi; ++i) pw *= chi.table[n];
          EXPECT_NEAR(std::abs(pw - 1.0), 0.0, 1e-9);
        }
        for (std::uint32_t m = 0; m < q; ++m) {
          if (!unit || std::gcd(m, q) != 1) continue;
          EXPECT_NEAR(std::abs(chi.table[(m * n) % q] - chi.table[m] * chi.table[n]), 0.0, 1e-9);
        }
      }
    }
    if (q > 20) continue;
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) {
        std::complex<double> s = 0.0;
        for (std::uint32_t n = 0; n < q; ++n) s += chars[a].table[n] * std::conj(chars[b].table[n]);
        EXPECT_NEAR(std::abs(s - (a == b ? double(phi) : 0.0)), 0.0, 1e-9) << q;
      }
    }
  }
}

TEST(Pretentious, Distance) {
  const auto lambda = arith::sieve_liouville(10'000);
  const auto one = arith::character_seq(arith::dirichlet_characters(1)[0], 10'000);
  EXPECT_EQ(arith::pretentious_distance(lambda, lambda, 10'000), 0.0);

  // independent prime-sum script (tests/oracles/golden.py, section "small")
  double acc = 0.0;
  for (std::uint64_t p = 2; p <= 10'000; ++p) {
    if (momo::testing::trial_is_prime(p)) acc += 2.0 / static_cast<double>(p);
  }
  const double d = arith::pretentious_distance(lambda, one, 10'000);
  EXPECT_EQ(d, std::sqrt(acc));
  EXPECT_NEAR(d, 2.2284792784468803, 1e-12);

  double prev = 0.0;
  for (std::uint64_t m : {10u, 100u, 1000u, 5000u, 10'000u}) {
    const double cur = arith::pretentious_distance(lambda, one, m);
    EXPECT_GE(cur, prev);
    prev = cur;
  }
  expect_error(ErrorCode::insufficient_range,
               [&] { arith::pretentious_distance(lambda, one, 10'001); });
}

TEST(Pretentious, TriangleInequality) {
  constexpr std::uint64_t n = 2000;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  auto random_unimodular = [&] {
    std::vector<std::complex<double>> v(n);
    for (auto& x : v) x = std::polar(1.0, angle(rng));
    return arith::ArithSeq::from_complex(arith::SeqTag::custom, v);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_unimodular();
    const auto v = random_unimodular();
    const auto w = random_unimodular();
    const double uw = arith::pretentious_distance(u, w, n);
    const double uv = arith::pretentious_distance(u, v, n);
    const double vw = arith::pretentious_distance(v, w, n);
    EXPECT_LE(uw, uv + vw + 1e-12);
  }
}

TEST(Mrt, ConstantOneAttainedAtOrigin) {
  const auto one = arith::character_seq(arith::dirichlet_characters(1)[0], 1000);
  const auto r = arith::mrt_infimum(one, 1000, 100, {.grid_points = 200});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_EQ(r.q, 1u);
  EXPECT_EQ(r.grid_size, 201u);
}

TEST(Mrt, DefaultQIsOneAtDeskScale) {
  EXPECT_LT(arith::mrt_q_bound(10'000, 100), 2.0);
  EXPECT_GE(arith::mrt_q_bound(10'000, 100), 1.0);
  const auto lambda = arith::sieve_liouville(10'000);
  const auto r = arith::mrt_infimum(lambda, 10'000, 100, {.grid_points = 100});
  EXPECT_EQ(r.q_bound, 1u);
  EXPECT_EQ(r.q, 1u);
  EXPECT_GT(r.value, 0.0);
}

TEST(Mrt, NonPrincipalCharacterFoundAtItsModulus) {
  const auto chars = arith::dirichlet_characters(3);
  const auto xi = arith::character_seq(chars[1], 1000);
  const auto r = arith::mrt_infimum(xi, 1000, 100, {.grid_points = 200, .q_override = 3});
  EXPECT_EQ(r.t, 0.0);
  EXPECT_EQ(r.q, 3u);
  EXPECT_EQ(r.character_index, 1u);
  // only p = 3 contributes: u(3) = xi(3) = 0
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-12);
}

TEST(Mrt, Errors) {
  const auto lambda = arith::sieve_liouville(1000);
  expect_error(ErrorCode::invalid_argument,
               [&] { arith::mrt_infimum(lambda, 1000, 100, {.grid_points = 0}); });
  expect_error(ErrorCode::invalid_argument, [&] { arith::mrt_infimum(lambda, 1000, 5); });
  expect_error(ErrorCode::insufficient_range, [&] { arith::mrt_infimum(lambda, 2000, 100); });
}
