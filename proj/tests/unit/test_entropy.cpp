#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "momo/arith/sieve.hpp"
#include "momo/entropy.hpp"

namespace en = momo::entropy;
using momo::ErrorCode;
using momo::arith::ArithSeq;
using momo::arith::SeqTag;

namespace {

const ArithSeq& lambda() {
  static const ArithSeq seq = momo::arith::sieve_liouville(1'000'000);
  return seq;
}

ArithSeq random_signs(std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int8_t> v(n);
  for (auto& s : v) s = (rng() & 1) ? 1 : -1;
  return ArithSeq::from_signs(SeqTag::custom, v);
}

}  // namespace

TEST(Prng, SplitMixReference) {
  // first output of SplitMix64 seeded with 0
  en::Prng rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(en::bernoulli_stream(0.5, 8, 1), (std::vector<std::uint8_t>{0, 0, 0, 1, 1, 0, 0, 0}));
  EXPECT_EQ(en::bernoulli_stream(0.3, 1000, 42), en::bernoulli_stream(0.3, 1000, 42));
  EXPECT_NE(en::bernoulli_stream(0.3, 1000, 42), en::bernoulli_stream(0.3, 1000, 43));
  EXPECT_THROW(en::bernoulli_stream(0.0, 10, 1), momo::Error);
  EXPECT_THROW(en::bernoulli_stream(1.0, 10, 1), momo::Error);
}

TEST(Prng, BinomialConcentration) {
  const std::uint64_t n = 1'000'000;
  const auto y = en::bernoulli_stream(0.8, n, 2024);
  std::uint64_t ones = 0;
  for (auto b : y) ones += b;
  const double mean = static_cast<double>(ones) / n;
  EXPECT_LE(std::abs(mean - 0.8), 3.0 * std::sqrt(0.8 * 0.2 / n));
}

TEST(Mix, ForcedMasks) {
  const std::uint64_t n = 5000;
  const std::vector<std::uint8_t> all(n, 1), none(n, 0);
  const auto same = en::bernoulli_mix(lambda(), all);
  const auto minus = en::bernoulli_mix(lambda(), none);
  for (std::uint64_t i = 1; i <= n; ++i) {
    ASSERT_EQ(same.sign(i), lambda().sign(i));
    ASSERT_EQ(minus.sign(i), -1);
  }
  const auto y = en::bernoulli_stream(0.4, n, 9);
  const auto u = en::bernoulli_mix(lambda(), 0.4, n, 9);
  for (std::uint64_t i = 1; i <= n; ++i) {
    ASSERT_NE(u.sign(i), 0);
    if (y[i - 1]) ASSERT_EQ(u.sign(i), lambda().sign(i));
  }
  const std::vector<std::uint8_t> long_mask(2'000'000, 1);
  EXPECT_THROW(en::bernoulli_mix(lambda(), long_mask), momo::Error);
}

TEST(Mix, CorrelationWithLiouville) {
  const std::uint64_t n = 1'000'000;
  const auto u = en::bernoulli_mix(lambda(), 0.8, n, 12345);
  const double corr = en::correlation(u, lambda(), n).real();
  EXPECT_LE(std::abs(corr - 0.8), 0.01);
  EXPECT_NEAR(en::sign_match_freq(u, lambda(), n), (1.0 + corr) / 2.0, 1e-15);
}

TEST(Correlation, Identities) {
  const std::uint64_t n = 100000;
  EXPECT_EQ(en::correlation(lambda(), lambda(), n).real(), 1.0);
  std::vector<std::int8_t> neg(n);
  for (std::uint64_t i = 1; i <= n; ++i) neg[i - 1] = static_cast<std::int8_t>(-lambda().sign(i));
  EXPECT_EQ(en::correlation(ArithSeq::from_signs(SeqTag::custom, neg), lambda(), n).real(), -1.0);

  const auto mu = momo::arith::sieve_mobius(n);
  double naive = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) naive += mu.sign(i) * lambda().sign(i);
  EXPECT_EQ(en::correlation(mu, lambda(), n).real(), naive / n);
  // mu lambda = mu^2, so this is the squarefree density
  EXPECT_NEAR(naive / n, 6.0 / (3.14159265358979 * 3.14159265358979), 1e-3);

  std::vector<std::complex<double>> z(1000);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::polar(0.5, 0.01 * i);
  const auto c = ArithSeq::from_complex(SeqTag::custom, z);
  EXPECT_NEAR(en::correlation(c, c, 1000).real(), 0.25, 1e-15);
  EXPECT_THROW(en::sign_match_freq(mu, lambda(), 100), momo::Error);
}

TEST(SignMatch, IndependentStreamsAndIdentity) {
  const std::uint64_t n = 1'000'000;
  const auto a = random_signs(n, 1), b = random_signs(n, 2);
  const double f = en::sign_match_freq(a, b, n);
  EXPECT_LE(std::abs(f - 0.5), 3.0 / (2.0 * std::sqrt(static_cast<double>(n))));
  EXPECT_NEAR(f, (1.0 + en::correlation(a, b, n).real()) / 2.0, 1e-15);
  EXPECT_EQ(en::sign_match_freq(a, a, n), 1.0);
}
